#include "lcpos/logconcave.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcpos {

CheckResult is_log_concave(const Sequence& s, bool require_no_internal_zeros) {
	if (s.empty())
		return CheckResult::pass();
	long first = s.first_index(), last = s.last_index();
	for (long i = first + 1; i < last; ++i) {
		Rational v = s.at(i) * s.at(i) - s.at(i - 1) * s.at(i + 1);
		if (v < 0)
			return CheckResult::fail({i}, v, "inequality");
	}
	if (require_no_internal_zeros) {
		long lo = first;
		while (lo <= last && s.at(lo) == 0)
			++lo;
		long hi = last;
		while (hi >= lo && s.at(hi) == 0)
			--hi;
		for (long i = lo + 1; i < hi; ++i)
			if (s.at(i) == 0)
				return CheckResult::fail({i}, 0, "internal-zero");
	}
	return CheckResult::pass();
}

CheckResult is_log_concave_pairs(const Sequence& s) {
	if (s.empty())
		return CheckResult::pass();
	long first = s.first_index(), last = s.last_index();
	// Violations need x_{i-1} and x_{j+1} nonzero, so only i-1 >= first and
	// j+1 <= last can fail; everything outside has a zero left-hand side.
	for (long i = first + 1; i < last; ++i)
		for (long j = i; j < last; ++j) {
			Rational v = s.at(i) * s.at(j) - s.at(i - 1) * s.at(j + 1);
			if (v < 0)
				return CheckResult::fail({i, j}, v, "inequality");
		}
	return CheckResult::pass();
}

CheckResult is_ulc(const Sequence& s, std::optional<long> order) {
	if (order && *order < 0)
		throw std::invalid_argument("ulc order must be nonnegative");
	if (s.empty())
		return CheckResult::pass();
	long first = s.first_index(), last = s.last_index();
	for (long k = first; k <= std::min(last, -1L); ++k)
		if (s.at(k) != 0)
			return CheckResult::fail({k}, s.at(k), "support");
	if (order) {
		long m = *order;
		for (long k = std::max(first, m + 1); k <= last; ++k)
			if (s.at(k) != 0)
				return CheckResult::fail({k}, s.at(k), "support");
		std::vector<Rational> ratios(m + 1);
		for (long k = 0; k <= m; ++k)
			ratios[k] = s.at(k) / Rational(binomial(m, k));
		return is_log_concave(Sequence(std::move(ratios), 0), true);
	}
	// Unbounded order: weight by k! and ask for plain log-concavity.
	std::vector<Rational> weighted(std::max(last, 0L) + 1);
	Integer factorial = 1;
	for (long k = 0; k <= std::max(last, 0L); ++k) {
		if (k > 0)
			factorial *= k;
		weighted[k] = s.at(k) * Rational(factorial);
	}
	return is_log_concave(Sequence(std::move(weighted), 0), true);
}

CheckResult is_q_log_concave(std::span<const QPoly> family) {
	if (family.empty())
		throw std::invalid_argument("q-log-concavity needs at least one polynomial");
	for (long n = 1; n + 1 < static_cast<long>(family.size()); ++n) {
		QPoly d = qpoly_sub_mul(family[n], family[n - 1], family[n + 1]);
		for (long power = 0; power <= d.degree(); ++power)
			if (d.coeff(power) < 0)
				return CheckResult::fail({n, power}, d.coeff(power), "inequality");
	}
	return CheckResult::pass();
}

}  // namespace lcpos
