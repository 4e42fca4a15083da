#pragma once

#include "lcpos/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lcpos {

// Uniform verdict-with-witness for the primitive predicates. On failure
// `witness_index` pins the first violating position -- its shape depends on
// the check ({i} for a three-term condition, {i,j} for the two-index form,
// {n,power} for polynomial families, and so on; each predicate documents its
// own layout. `witness_value` is the quantity the check required to be
// nonnegative, evaluated at the witness, so the verdict can be reproduced by
// plugging the index back into the defining inequality. Structural failures
// ("internal-zero", "support") store the offending entry instead.
struct CheckResult {
	bool ok = true;
	std::vector<long> witness_index;
	Rational witness_value = 0;
	std::string reason;  // "" when ok; else "inequality", "internal-zero" or "support"

	explicit operator bool() const { return ok; }

	static CheckResult pass() { return CheckResult{}; }
	static CheckResult fail(std::vector<long> index, Rational value, std::string why) {
		return CheckResult{false, std::move(index), std::move(value), std::move(why)};
	}
};

}  // namespace lcpos
