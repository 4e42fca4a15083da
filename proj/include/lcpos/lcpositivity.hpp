#pragma once

#include "lcpos/check_result.hpp"
#include "lcpos/qpoly.hpp"
#include "lcpos/triangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcpos {

// A_r(n;q) = sum_{k=r}^{n} a(n,k) q^k. Requires r >= 0 and 0 <= n <= max_n;
// r past the end of the row gives the zero polynomial (empty tail).
QPoly a_r_poly(const Triangle& tri, long r, long n);

// Coefficient a_k(n,t) in the expansion
//   A_r(n;q)^2 - A_r(n-1;q) A_r(n+1;q) = sum_t A_r(n,t) q^t,
//   A_r(n,t) = sum_{k=r}^{floor(t/2)} a_k(n,t):
// a_k(n,t) = 2 a(n,k)a(n,t-k) - a(n-1,k)a(n+1,t-k) - a(n+1,k)a(n-1,t-k)
// for k < t/2, halved in the obvious way at the middle k = t/2. Requires
// 1 <= n <= max_n - 1, 0 <= t <= 2n, 0 <= k <= t/2.
Rational a_coeff(const Triangle& tri, long n, long t, long k);

// A_r(n,t); same range plus 0 <= r and 2r <= t.
Rational a_rnt(const Triangle& tri, long n, long t, long r);

// Which of the two independent routes decides a certificate: summing the
// closed-form coefficients, or literally expanding the polynomial products.
// They must agree cell for cell; a certificate cross-checks its witness
// against the other route before reporting it.
enum class CertMethod {
	coefficient_formula,
	polynomial_expansion,
};

std::string cert_method_name(CertMethod method);

struct LcWitness {
	long r = 0, n = 0, t = 0;
	Rational value;  // the negative A_r(n,t)
};

// Verdict of check_lc_positive over 1 <= n <= n_max, 0 <= r <= n,
// 2r <= t <= 2n. The witness, when present, is the lexicographically first
// violating (n, r, t) reordered for display as (r, n, t).
struct LcCertificate {
	bool holds = true;
	long n_max = 0;
	std::optional<LcWitness> witness;
	CertMethod method = CertMethod::coefficient_formula;
};

struct DoubleLcCertificate {
	LcCertificate direct;
	LcCertificate reciprocal;

	bool holds() const { return direct.holds && reciprocal.holds; }
};

// Requires n_max <= max_n - 1 (row n_max + 1 feeds the top certificates).
LcCertificate check_lc_positive(const Triangle& tri, long n_max,
                                CertMethod method = CertMethod::coefficient_formula);
DoubleLcCertificate check_double_lc_positive(const Triangle& tri, long n_max,
                                             CertMethod method = CertMethod::coefficient_formula);

// Two conditions that together imply LC-positivity and are cheaper to scan
// by eye:
//   (A) for each (n,t) the list a_0(n,t) .. a_{floor(t/2)}(n,t) has no
//       strictly negative entry after a strictly positive one (i.e. it is
//       nonpositive-then-nonnegative, zeros acceptable on either side);
//       witness {n, t, k};
//   (B) the polynomial family {A_0(n;q)}_{n=0..n_max+1} is q-log-concave;
//       witness {n, power}.
// When both hold the implication is exercised on the spot: a failing
// check_lc_positive would be a soundness bug and throws logic_error.
struct ConditionsAbReport {
	CheckResult condition_a;
	CheckResult condition_b;
	// True when both conditions held and the implied certificate was run and
	// confirmed; false whenever either condition fails.
	bool lc_positivity_confirmed = false;

	bool holds() const { return condition_a.ok && condition_b.ok; }
};

ConditionsAbReport check_conditions_ab(const Triangle& tri, long n_max);

// Quick screens that every LC-positive triangle must pass; useful for
// rejecting a candidate before paying for a full certificate. Uses rows up
// to n_max only. All four are full log-concavity checks (internal zeros
// rejected): a violation in any of them forces some A_r(n,t) < 0.
struct NecessaryConditionsReport {
	CheckResult columns;      // {a(n,r)}_n for each r; witness {r, n}
	CheckResult row_sums;     // {sum_k a(n,k)}_n; witness {n}
	CheckResult evaluations;  // {A_r(n;p)}_n per (r, sample); witness {r, sample, n}
	CheckResult diagonal;     // {a(n,n)}_n; witness {n}
	std::vector<Rational> samples;

	bool holds() const {
		return columns.ok && row_sums.ok && evaluations.ok && diagonal.ok;
	}
};

// p_samples must be strictly positive; empty means the default {1/2, 1, 2, 3}.
NecessaryConditionsReport necessary_conditions(const Triangle& tri, long n_max,
                                               std::vector<Rational> p_samples = {});

struct BoundViolation {
	std::string bound;
	long n = 0, t = 0, r = 0;
	Rational lhs;  // the certified quantity
	Rational rhs;  // the bound it had to dominate
};

// Lower bounds tying the scaled triangles b = a*x_k, c = a*y_{n-k} and
// d = a*x_k*y_{n-k} back to the base triangle, with X_r = x_r x_{t-r} and
// Y_r = y_{n-t+r} y_{n-r}:
//   B_r(n,t) >= A_r(n,t) X_r                       (all certified cells)
//   C_r(n,t) >= A_r(n,t) Y_r                       (t <= n + r)
//   C_r(n,t) >= A_r(n,t) Y_r + g_r (Y_r - Y_{r-1}) (t <= n + r), with
//                g_r = a(n+1,r) a(n-1,t-r)
//   D_r(n,t) >= A_r(n,t) X_r Y_r                   (t <= n + r)
// Preconditions: x and y log-concave with no internal zeros, and the
// triangle double LC-positive up to n_max (certified internally; failure
// throws invalid_argument). Any violation found afterwards is reported as a
// soundness bug rather than thrown, so it can be inspected.
struct BasicBoundsReport {
	long cells_checked = 0;
	std::vector<BoundViolation> violations;

	bool holds() const { return violations.empty(); }
};

BasicBoundsReport check_basic_bounds(const Triangle& tri, const Sequence& x,
                                     const Sequence& y, long n_max);

// For a triangle generated by the row operator, the tail coefficients t <= n+r
// collapse onto the previous row a = L^{n-1}(u):
//   A_r(n,t) == mu^2 (a_{r-1} a_{t-r-1} - a_{r-2} a_{t-r})   for t < n + r
//   A_r(n,t) >= the same expression                           at t = n + r
// check_rem_bound builds the triangle to top_n (>= 2 required) and verifies
// every covered cell.
struct RemBoundReport {
	long equality_cells = 0;
	long inequality_cells = 0;
	std::vector<BoundViolation> violations;

	bool holds() const { return violations.empty(); }
};

RemBoundReport check_rem_bound(const LOperatorSpec& spec, long top_n);

}  // namespace lcpos
