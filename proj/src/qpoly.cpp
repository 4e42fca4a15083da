#include "lcpos/qpoly.hpp"

#include <stdexcept>
#include <utility>

namespace lcpos {

namespace {
const Rational kZero = 0;
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
	trim();
}

QPoly QPoly::monomial(long power, const Rational& coeff) {
	if (power < 0)
		throw std::invalid_argument("monomial power must be nonnegative");
	if (coeff == 0)
		return QPoly();
	std::vector<Rational> c(power + 1);
	c.back() = coeff;
	return QPoly(std::move(c));
}

const Rational& QPoly::coeff(long power) const {
	if (power < 0 || power > degree())
		return kZero;
	return coeffs_[power];
}

Rational QPoly::eval(const Rational& q) const {
	Rational value = 0;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		value = value * q + *it;
	return value;
}

void QPoly::trim() {
	while (!coeffs_.empty() && coeffs_.back() == 0)
		coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
	if (coeffs_.size() < rhs.coeffs_.size())
		coeffs_.resize(rhs.coeffs_.size());
	for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
		coeffs_[i] += rhs.coeffs_[i];
	trim();
	return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
	if (coeffs_.size() < rhs.coeffs_.size())
		coeffs_.resize(rhs.coeffs_.size());
	for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
		coeffs_[i] -= rhs.coeffs_[i];
	trim();
	return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
	if (lhs.is_zero() || rhs.is_zero())
		return QPoly();
	std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
	for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
		if (lhs.coeffs_[i] == 0)
			continue;
		for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
			out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
	}
	return QPoly(std::move(out));
}

QPoly qpoly_sub_mul(const QPoly& f, const QPoly& g, const QPoly& h) {
	return f * f - g * h;
}

}  // namespace lcpos
