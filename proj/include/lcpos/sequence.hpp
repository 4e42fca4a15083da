#pragma once

#include "lcpos/rational.hpp"

#include <vector>

namespace lcpos {

// Finitely supported sequence of nonnegative rationals over the integers.
// `offset` is the index of the first stored value, so negative indices are
// first-class: the row operator L and the reciprocal construction both need
// them. Reads outside the stored window are exact zero; stored entries must
// be >= 0 (construction throws otherwise).
class Sequence {
 public:
	Sequence() = default;
	explicit Sequence(std::vector<Rational> values, long offset = 0);

	// 1 at index 0, zero elsewhere.
	static Sequence impulse();

	const Rational& at(long k) const;
	long offset() const { return offset_; }
	long size() const { return static_cast<long>(values_.size()); }
	bool empty() const { return values_.empty(); }
	long first_index() const { return offset_; }
	long last_index() const { return offset_ + size() - 1; }  // meaningless when empty
	const std::vector<Rational>& values() const { return values_; }

	// v_k = at(-k); same stored window mirrored around zero.
	Sequence reversed() const;

	// True when both describe the same index -> value function, ignoring how
	// many explicit zeros pad the stored windows.
	bool same_function(const Sequence& other) const;

	bool operator==(const Sequence& other) const = default;

 private:
	std::vector<Rational> values_;
	long offset_ = 0;
};

}  // namespace lcpos
