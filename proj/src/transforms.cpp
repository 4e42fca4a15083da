#include "lcpos/transforms.hpp"

#include "lcpos/lcpositivity.hpp"
#include "lcpos/logconcave.hpp"

#include <stdexcept>

namespace lcpos {

namespace {

void check_transform_range(const Triangle& tri, long n_max) {
	if (n_max < 0 || n_max > tri.max_n())
		throw std::out_of_range("transform needs 0 <= n_max <= max_n");
}

void require_lc(const Sequence& s, const char* what) {
	CheckResult lc = is_log_concave(s, true);
	if (!lc)
		throw std::invalid_argument(std::string(what) +
		                            " must be log-concave with no internal zeros (" + lc.reason +
		                            " at index " + std::to_string(lc.witness_index.at(0)) + ")");
}

void require_offset0(const Sequence& s, const char* what) {
	if (!s.empty() && s.offset() < 0)
		throw std::invalid_argument(std::string(what) + " must not have entries at negative indices");
}

}  // namespace

Sequence linear_transform(const Triangle& tri, const Sequence& x, long n_max) {
	check_transform_range(tri, n_max);
	std::vector<Rational> z(n_max + 1);
	for (long n = 0; n <= n_max; ++n)
		for (long k = 0; k <= n; ++k)
			z[n] += tri.at(n, k) * x.at(k);
	return Sequence(std::move(z), 0);
}

Sequence bilinear_transform(const Triangle& tri, const Sequence& x, const Sequence& y,
                            long n_max) {
	check_transform_range(tri, n_max);
	std::vector<Rational> z(n_max + 1);
	for (long n = 0; n <= n_max; ++n)
		for (long k = 0; k <= n; ++k)
			z[n] += tri.at(n, k) * x.at(k) * y.at(n - k);
	return Sequence(std::move(z), 0);
}

Sequence ordinary_convolution(const Sequence& x, const Sequence& y) {
	if (x.empty() || y.empty())
		return Sequence();
	std::vector<Rational> z(x.size() + y.size() - 1);
	for (long i = 0; i < x.size(); ++i)
		for (long j = 0; j < y.size(); ++j)
			z[i + j] += x.values()[i] * y.values()[j];
	return Sequence(std::move(z), x.offset() + y.offset());
}

Sequence binomial_convolution(const Sequence& x, const Sequence& y) {
	require_offset0(x, "x");
	require_offset0(y, "y");
	if (x.empty() || y.empty())
		return Sequence();
	long last = x.last_index() + y.last_index();
	std::vector<Rational> z(last + 1);
	for (long n = 0; n <= last; ++n) {
		Integer c = 1;  // walks C(n,k) across the row
		for (long k = 0; k <= n; ++k) {
			if (x.at(k) != 0 && y.at(n - k) != 0)
				z[n] += Rational(c) * x.at(k) * y.at(n - k);
			c = c * (n - k) / (k + 1);
		}
	}
	return Sequence(std::move(z), 0);
}

Sequence multinomial_transform(const std::vector<Sequence>& xs, long n_max) {
	if (xs.empty())
		throw std::invalid_argument("multinomial transform needs at least one sequence");
	if (n_max < 0)
		throw std::invalid_argument("n_max must be nonnegative");
	for (const Sequence& s : xs)
		require_offset0(s, "every input");
	Sequence acc = xs[0];
	for (size_t i = 1; i < xs.size(); ++i)
		acc = binomial_convolution(acc, xs[i]);
	std::vector<Rational> z(n_max + 1);
	for (long n = 0; n <= n_max; ++n)
		z[n] = acc.at(n);
	return Sequence(std::move(z), 0);
}

LiggettInstance::LiggettInstance(Rational alpha_in, Rational beta_in, Rational lambda_in,
                                 Rational mu_in, Sequence u_in, Sequence v_in, Sequence x_in,
                                 Sequence y_in, long n_in)
    : alpha(std::move(alpha_in)),
      beta(std::move(beta_in)),
      lambda(std::move(lambda_in)),
      mu(std::move(mu_in)),
      u(std::move(u_in)),
      v(std::move(v_in)),
      x(std::move(x_in)),
      y(std::move(y_in)),
      n(n_in) {
	if (alpha < 0 || beta < 0)
		throw std::invalid_argument("alpha and beta must be nonnegative");
	// Delegates the lambda/mu/u checks; the spec object itself is rebuilt on use.
	LOperatorSpec(lambda, mu, u);
	require_offset0(v, "v");
	require_offset0(x, "x");
	require_offset0(y, "y");
	require_lc(v, "v");
	require_lc(x, "x");
	require_lc(y, "y");
	if (n < 1)
		throw std::invalid_argument("n must be at least 1");
}

LiggettResult liggett_triple(const LiggettInstance& inst) {
	LOperatorSpec spec(inst.lambda, inst.mu, inst.u);
	std::vector<Sequence> rows = loperator_rows(spec, inst.n + 1);
	const Rational &a = inst.alpha, &b = inst.beta;

	LiggettResult result;
	for (long k = 0; k <= inst.n + 1; ++k)
		result.z_next += rows[inst.n + 1].at(k) * inst.v.at(k) * inst.x.at(k) * inst.y.at(inst.n + 1 - k);
	for (long k = 0; k <= inst.n; ++k)
		result.z_mid += rows[inst.n].at(k) * (a * inst.v.at(k) + b * inst.v.at(k + 1)) *
		                inst.x.at(k) * inst.y.at(inst.n - k);
	for (long k = 0; k <= inst.n - 1; ++k)
		result.z_prev += rows[inst.n - 1].at(k) *
		                 (a * a * inst.v.at(k) + 2 * a * b * inst.v.at(k + 1) +
		                  b * b * inst.v.at(k + 2)) *
		                 inst.x.at(k) * inst.y.at(inst.n - 1 - k);
	result.holds = result.z_prev * result.z_next <= result.z_mid * result.z_mid;
	return result;
}

PqrReport pqr_decomposition(const LiggettInstance& inst, long t, long r) {
	long n = inst.n;
	if (t % 2 == 0)
		throw std::invalid_argument("pqr decomposition is defined for odd t only");
	if (r < 1)
		throw std::invalid_argument("pqr decomposition needs r >= 1");
	if (2 * r > t || t > n + r)
		throw std::invalid_argument("pqr decomposition needs 2r <= t <= n + r");

	LOperatorSpec spec(inst.lambda, inst.mu, inst.u);
	Triangle tri = loperator_triangle(spec, n + 1);
	Triangle d = scale_triangle(tri, inst.x, inst.y);
	const Sequence arow = loperator_rows(spec, n - 1).back();  // L^{n-1}(u), full support
	const Sequence &x = inst.x, &y = inst.y;

	PqrReport rep;
	rep.t = t;
	rep.r = r;
	long s = (t - 1) / 2;
	for (long k = r; k <= s; ++k) {
		rep.p_sum += 2 * d.at(n, k) * d.at(n, t - k) - d.at(n - 1, k) * d.at(n + 1, t - k) -
		             d.at(n + 1, k) * d.at(n - 1, t - k);
		rep.q_sum += d.at(n, k) * d.at(n, t - k - 1) + d.at(n, k - 1) * d.at(n, t - k) -
		             d.at(n - 1, k - 1) * d.at(n + 1, t - k) -
		             d.at(n + 1, k) * d.at(n - 1, t - k - 1);
		rep.r_sum += 2 * d.at(n, k - 1) * d.at(n, t - k - 1) -
		             d.at(n - 1, k - 2) * d.at(n + 1, t - k) -
		             d.at(n + 1, k) * d.at(n - 1, t - k - 2);
	}

	rep.p_expected = a_rnt(d, n, t, r);
	rep.r_expected = a_rnt(reciprocal(d), n, 2 * n - t + 2, n - t + r + 1);
	rep.q_expected = a_rnt(d, n, t - 1, r - 1) + d.at(n + 1, r - 1) * d.at(n - 1, t - r) -
	                 d.at(n, r - 1) * d.at(n, t - r);
	rep.identities_hold = rep.p_sum == rep.p_expected && rep.q_sum == rep.q_expected &&
	                      rep.r_sum == rep.r_expected;

	const Rational &lam = inst.lambda, &mu = inst.mu;
	rep.e_value = arow.at(r - 1) * arow.at(t - r - 1) - arow.at(r - 2) * arow.at(t - r);
	rep.p_bound_e = mu * mu * rep.e_value * x.at(r) * x.at(t - r) * y.at(n - t + r) * y.at(n - r);
	rep.q_bound_e = -lam * mu * rep.e_value * x.at(r - 1) * x.at(t - r) * y.at(n - t + r) *
	                y.at(n - r + 1);
	rep.r_bound_e = lam * lam * rep.e_value * x.at(r - 1) * x.at(t - r - 1) *
	                y.at(n - t + r + 1) * y.at(n - r + 1);
	rep.e_bounds_hold = rep.p_sum >= rep.p_bound_e && rep.q_sum >= rep.q_bound_e &&
	                    rep.r_sum >= rep.r_bound_e;

	rep.p_bound_a = a_rnt(tri, n, t, r) * x.at(r) * x.at(t - r) * y.at(n - t + r) * y.at(n - r);
	rep.r_bound_a = a_rnt(reciprocal(tri), n, 2 * n - t + 2, n - t + r + 1) * x.at(r - 1) *
	                x.at(t - r - 1) * y.at(n - t + r + 1) * y.at(n - r + 1);
	Rational q_base = a_rnt(tri, n, t - 1, r - 1) + tri.at(n + 1, r - 1) * tri.at(n - 1, t - r) -
	                  tri.at(n, r - 1) * tri.at(n, t - r);
	rep.q_bound_a = q_base * x.at(r - 1) * x.at(t - r) * y.at(n - t + r) * y.at(n - r + 1);
	rep.a_bounds_hold = rep.p_sum >= rep.p_bound_a && rep.q_sum >= rep.q_bound_a &&
	                    rep.r_sum >= rep.r_bound_a;

	const Rational &al = inst.alpha, &be = inst.beta;
	rep.amgm_holds = al * al * rep.p_sum + 2 * al * be * rep.q_sum + be * be * rep.r_sum >= 0;
	return rep;
}

std::vector<std::pair<long, long>> pqr_cells(long n) {
	std::vector<std::pair<long, long>> cells;
	for (long t = 3; t <= 2 * n - 1; t += 2)
		for (long r = std::max(1L, t - n); 2 * r <= t; ++r)
			cells.emplace_back(t, r);
	return cells;
}

}  // namespace lcpos
