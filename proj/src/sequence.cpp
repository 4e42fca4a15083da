#include "lcpos/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lcpos {

namespace {
const Rational kZero = 0;
}

Sequence::Sequence(std::vector<Rational> values, long offset)
    : values_(std::move(values)), offset_(offset) {
	for (const Rational& v : values_)
		if (v < 0)
			throw std::invalid_argument("sequence entries must be nonnegative");
}

Sequence Sequence::impulse() {
	return Sequence({Rational(1)}, 0);
}

const Rational& Sequence::at(long k) const {
	long i = k - offset_;
	if (i < 0 || i >= size())
		return kZero;
	return values_[i];
}

Sequence Sequence::reversed() const {
	std::vector<Rational> rev(values_.rbegin(), values_.rend());
	return Sequence(std::move(rev), -(offset_ + size() - 1));
}

bool Sequence::same_function(const Sequence& other) const {
	long lo = std::min(empty() ? 0 : first_index(), other.empty() ? 0 : other.first_index());
	long hi = std::max(empty() ? 0 : last_index(), other.empty() ? 0 : other.last_index());
	for (long k = lo; k <= hi; ++k)
		if (at(k) != other.at(k))
			return false;
	return true;
}

}  // namespace lcpos
