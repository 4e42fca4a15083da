#pragma once

#include "lcpos/rational.hpp"
#include "lcpos/sequence.hpp"
#include "lcpos/triangle.hpp"

#include <utility>
#include <vector>

namespace lcpos {

// z_n = sum_k a(n,k) x_k for n = 0..n_max. x is read with zero extension, so
// any offset is accepted; entries at negative indices are simply never used.
Sequence linear_transform(const Triangle& tri, const Sequence& x, long n_max);

// z_n = sum_k a(n,k) x_k y_{n-k}.
Sequence bilinear_transform(const Triangle& tri, const Sequence& x, const Sequence& y,
                            long n_max);

// (x * y)_n = sum_k x_k y_{n-k}; supports arbitrary offsets (they add).
Sequence ordinary_convolution(const Sequence& x, const Sequence& y);

// z_n = sum_k C(n,k) x_k y_{n-k}. Binomial weights only make sense for
// sequences indexed from 0, so negative offsets are rejected; the result
// starts at offset 0.
Sequence binomial_convolution(const Sequence& x, const Sequence& y);

// Left fold of binomial_convolution over xs (at least one sequence, offsets
// >= 0), materialized to exactly n_max + 1 entries at offset 0 (truncating
// or zero-padding as needed).
Sequence multinomial_transform(const std::vector<Sequence>& xs, long n_max);

// One instance of the generalized shuffle inequality: a triangle generated by
// the row operator (lambda, mu, u), recurrence weights alpha and beta pushing
// a sequence v down one row, and log-concave coefficient sequences x and y.
// Construction validates alpha, beta, lambda, mu >= 0; u, v, x, y log-concave
// with no internal zeros; v, x, y starting at offset >= 0; n >= 1.
struct LiggettInstance {
	Rational alpha, beta;
	Rational lambda, mu;
	Sequence u;  // any offset
	Sequence v, x, y;
	long n;

	LiggettInstance(Rational alpha_in, Rational beta_in, Rational lambda_in, Rational mu_in,
	                Sequence u_in, Sequence v_in, Sequence x_in, Sequence y_in, long n_in);
};

// The three weighted sums whose log-concavity the shuffle inequality asserts,
// with a(n,k) = L^n(u)_k:
//   z_{n+1} = sum_k a(n+1,k) v_k x_k y_{n+1-k}
//   z_n     = sum_k a(n,k) (alpha v_k + beta v_{k+1}) x_k y_{n-k}
//   z_{n-1} = sum_k a(n-1,k) (alpha^2 v_k + 2 alpha beta v_{k+1} + beta^2 v_{k+2})
//                 x_k y_{n-1-k}
// holds <=> z_{n-1} z_{n+1} <= z_n^2. Liggett's original inequality is
// alpha = beta = lambda = mu = 1 with u the impulse.
struct LiggettResult {
	Rational z_prev, z_mid, z_next;
	bool holds = true;
};

LiggettResult liggett_triple(const LiggettInstance& inst);

// Decomposition of one odd-weight coefficient of the difference
// z_n^2 - z_{n-1} z_{n+1} into three sums over the scaled triangle
// d(n,k) = a(n,k) x_k y_{n-k}, with s = (t-1)/2 and k running r..s:
//   P_k = 2 d(n,k)d(n,t-k) - d(n-1,k)d(n+1,t-k) - d(n+1,k)d(n-1,t-k)
//   Q_k = d(n,k)d(n,t-k-1) + d(n,k-1)d(n,t-k)
//         - d(n-1,k-1)d(n+1,t-k) - d(n+1,k)d(n-1,t-k-1)
//   R_k = 2 d(n,k-1)d(n,t-k-1) - d(n-1,k-2)d(n+1,t-k) - d(n+1,k)d(n-1,t-k-2)
// The report records the sums, the closed forms they must equal (sum P is
// A_r(n,t) of the scaled triangle; sum R is the mirrored coefficient
// A*_{n-t+r+1}(n, 2n-t+2); sum Q matches A_{r-1}(n,t-1) plus a correction),
// the lower bounds through E = a_{r-1}a_{t-r-1} - a_{r-2}a_{t-r} on the row
// a = L^{n-1}(u) and through the unscaled coefficients, and the weighted
// AM-GM closing step alpha^2 P + 2 alpha beta Q + beta^2 R >= 0.
// Requires t odd, r >= 1, 2r <= t, t <= n + r.
struct PqrReport {
	long t = 0, r = 0;
	Rational p_sum, q_sum, r_sum;
	Rational p_expected, q_expected, r_expected;
	Rational e_value;
	Rational p_bound_e, q_bound_e, r_bound_e;
	Rational p_bound_a, q_bound_a, r_bound_a;
	bool identities_hold = false;
	bool e_bounds_hold = false;
	bool a_bounds_hold = false;
	bool amgm_holds = false;

	bool holds() const {
		return identities_hold && e_bounds_hold && a_bounds_hold && amgm_holds;
	}
};

PqrReport pqr_decomposition(const LiggettInstance& inst, long t, long r);

// All (t, r) pairs pqr_decomposition accepts for a given n: odd t with
// 2r <= t <= n + r and r >= 1.
std::vector<std::pair<long, long>> pqr_cells(long n);

}  // namespace lcpos
