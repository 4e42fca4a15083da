#include "lcpos/lcpositivity.hpp"

#include "lcpos/logconcave.hpp"

#include <stdexcept>

namespace lcpos {

namespace {

void check_cert_range(const Triangle& tri, long n_max) {
	if (n_max < 0)
		throw std::invalid_argument("n_max must be nonnegative");
	if (n_max > tri.max_n() - 1)
		throw std::invalid_argument("certificate needs rows up to n_max + 1; triangle stops at " +
		                            std::to_string(tri.max_n()));
}

// Recompute one A_r(n,t) by the route the certificate did NOT use, and
// insist the witness survives. Guards against a bug in either formula
// silently producing a bogus verdict.
void cross_check_witness(const Triangle& tri, const LcWitness& w, CertMethod used) {
	Rational other;
	if (used == CertMethod::coefficient_formula) {
		QPoly d = qpoly_sub_mul(a_r_poly(tri, w.r, w.n), a_r_poly(tri, w.r, w.n - 1),
		                        a_r_poly(tri, w.r, w.n + 1));
		other = d.coeff(w.t);
	} else {
		other = a_rnt(tri, w.n, w.t, w.r);
	}
	if (other != w.value)
		throw std::logic_error("certificate witness failed its independent recomputation (bug)");
}

}  // namespace

QPoly a_r_poly(const Triangle& tri, long r, long n) {
	if (n < 0 || n > tri.max_n())
		throw std::out_of_range("a_r_poly: row " + std::to_string(n) + " out of range");
	if (r < 0)
		throw std::out_of_range("a_r_poly: need r >= 0");
	if (r > n)
		return QPoly();  // empty tail; A_r(n-1;q) at r = n needs this to be zero
	std::vector<Rational> coeffs(n + 1);
	for (long k = r; k <= n; ++k)
		coeffs[k] = tri.at(n, k);
	return QPoly(std::move(coeffs));
}

Rational a_coeff(const Triangle& tri, long n, long t, long k) {
	if (n < 1 || n > tri.max_n() - 1)
		throw std::out_of_range("a_coeff: need 1 <= n <= max_n - 1");
	if (t < 0 || t > 2 * n)
		throw std::out_of_range("a_coeff: need 0 <= t <= 2n");
	if (k < 0 || 2 * k > t)
		throw std::out_of_range("a_coeff: need 0 <= k <= t/2");
	if (2 * k == t)
		return tri.at(n, k) * tri.at(n, k) - tri.at(n - 1, k) * tri.at(n + 1, k);
	return 2 * tri.at(n, k) * tri.at(n, t - k) - tri.at(n - 1, k) * tri.at(n + 1, t - k) -
	       tri.at(n + 1, k) * tri.at(n - 1, t - k);
}

Rational a_rnt(const Triangle& tri, long n, long t, long r) {
	if (r < 0 || 2 * r > t)
		throw std::out_of_range("a_rnt: need 0 <= r and 2r <= t");
	Rational sum = 0;
	for (long k = r; 2 * k <= t; ++k)
		sum += a_coeff(tri, n, t, k);
	return sum;
}

std::string cert_method_name(CertMethod method) {
	return method == CertMethod::coefficient_formula ? "coefficient-formula"
	                                                 : "polynomial-expansion";
}

LcCertificate check_lc_positive(const Triangle& tri, long n_max, CertMethod method) {
	check_cert_range(tri, n_max);
	LcCertificate cert;
	cert.n_max = n_max;
	cert.method = method;
	for (long n = 1; n <= n_max; ++n) {
		if (method == CertMethod::coefficient_formula) {
			// Suffix sums of a_k(n,t) over k give every A_r(n,t) for this n in
			// one pass: A_r(n,t) = suffix[t][r].
			std::vector<std::vector<Rational>> suffix(2 * n + 1);
			for (long t = 0; t <= 2 * n; ++t) {
				long half = t / 2;
				suffix[t].assign(half + 2, Rational(0));
				for (long k = half; k >= 0; --k)
					suffix[t][k] = a_coeff(tri, n, t, k) + suffix[t][k + 1];
			}
			for (long r = 0; r <= n; ++r)
				for (long t = 2 * r; t <= 2 * n; ++t)
					if (suffix[t][r] < 0) {
						cert.holds = false;
						cert.witness = LcWitness{r, n, t, suffix[t][r]};
						cross_check_witness(tri, *cert.witness, method);
						return cert;
					}
		} else {
			for (long r = 0; r <= n; ++r) {
				QPoly d = qpoly_sub_mul(a_r_poly(tri, r, n), a_r_poly(tri, r, n - 1),
				                        a_r_poly(tri, r, n + 1));
				for (long t = 2 * r; t <= 2 * n; ++t)
					if (d.coeff(t) < 0) {
						cert.holds = false;
						cert.witness = LcWitness{r, n, t, d.coeff(t)};
						cross_check_witness(tri, *cert.witness, method);
						return cert;
					}
			}
		}
	}
	return cert;
}

DoubleLcCertificate check_double_lc_positive(const Triangle& tri, long n_max,
                                             CertMethod method) {
	return DoubleLcCertificate{check_lc_positive(tri, n_max, method),
	                           check_lc_positive(reciprocal(tri), n_max, method)};
}

ConditionsAbReport check_conditions_ab(const Triangle& tri, long n_max) {
	check_cert_range(tri, n_max);
	ConditionsAbReport report;
	// (A): scan each coefficient list for a negative entry after a positive one.
	for (long n = 1; n <= n_max && report.condition_a.ok; ++n)
		for (long t = 0; t <= 2 * n && report.condition_a.ok; ++t) {
			bool seen_positive = false;
			for (long k = 0; 2 * k <= t; ++k) {
				Rational v = a_coeff(tri, n, t, k);
				if (v > 0)
					seen_positive = true;
				else if (v < 0 && seen_positive) {
					report.condition_a = CheckResult::fail({n, t, k}, v, "inequality");
					break;
				}
			}
		}
	// (B): q-log-concavity of the r = 0 polynomials, one row past n_max so
	// the n = n_max difference is covered.
	std::vector<QPoly> family;
	family.reserve(n_max + 2);
	for (long n = 0; n <= n_max + 1; ++n)
		family.push_back(a_r_poly(tri, 0, n));
	report.condition_b = is_q_log_concave(family);
	if (report.holds()) {
		if (!check_lc_positive(tri, n_max).holds)
			throw std::logic_error(
			    "conditions (A) and (B) hold but the LC-positivity certificate fails (bug)");
		report.lc_positivity_confirmed = true;
	}
	return report;
}

NecessaryConditionsReport necessary_conditions(const Triangle& tri, long n_max,
                                               std::vector<Rational> p_samples) {
	if (n_max < 0 || n_max > tri.max_n())
		throw std::invalid_argument("necessary_conditions: n_max out of range");
	if (p_samples.empty())
		p_samples = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
	for (const Rational& p : p_samples)
		if (p <= 0)
			throw std::invalid_argument("p samples must be strictly positive");
	NecessaryConditionsReport report;
	report.samples = p_samples;

	for (long r = 0; r <= n_max && report.columns.ok; ++r) {
		std::vector<Rational> col;
		for (long n = r; n <= n_max; ++n)
			col.push_back(tri.at(n, r));
		// Offset r makes the witness index the absolute row number.
		CheckResult lc = is_log_concave(Sequence(std::move(col), r), true);
		if (!lc)
			report.columns = CheckResult::fail({r, lc.witness_index[0]}, lc.witness_value, lc.reason);
	}

	std::vector<Rational> sums;
	for (long n = 0; n <= n_max; ++n)
		sums.push_back(tri.row_sum(n));
	report.row_sums = is_log_concave(Sequence(std::move(sums), 0), true);

	for (long r = 0; r <= n_max && report.evaluations.ok; ++r) {
		std::vector<QPoly> polys;
		for (long n = r; n <= n_max; ++n)
			polys.push_back(a_r_poly(tri, r, n));
		for (size_t si = 0; si < p_samples.size() && report.evaluations.ok; ++si) {
			std::vector<Rational> vals;
			vals.reserve(polys.size());
			for (const QPoly& f : polys)
				vals.push_back(f.eval(p_samples[si]));
			CheckResult lc = is_log_concave(Sequence(std::move(vals), r), true);
			if (!lc)
				report.evaluations = CheckResult::fail(
				    {r, static_cast<long>(si), lc.witness_index[0]}, lc.witness_value, lc.reason);
		}
	}

	std::vector<Rational> diag;
	for (long n = 0; n <= n_max; ++n)
		diag.push_back(tri.at(n, n));
	report.diagonal = is_log_concave(Sequence(std::move(diag), 0), true);
	return report;
}

BasicBoundsReport check_basic_bounds(const Triangle& tri, const Sequence& x,
                                     const Sequence& y, long n_max) {
	check_cert_range(tri, n_max);
	if (!is_log_concave(x, true) || !is_log_concave(y, true))
		throw std::invalid_argument("x and y must be log-concave with no internal zeros");
	DoubleLcCertificate cert = check_double_lc_positive(tri, n_max);
	if (!cert.holds())
		throw std::invalid_argument("triangle is not double LC-positive up to n_max " +
		                            std::to_string(n_max));

	Triangle b = scale_triangle(tri, x, std::nullopt);
	Triangle c = scale_triangle(tri, std::nullopt, y);
	Triangle d = scale_triangle(tri, x, y);

	BasicBoundsReport report;
	auto record = [&report](const char* bound, long n, long t, long r, Rational lhs,
	                        Rational rhs) {
		if (lhs < rhs)
			report.violations.push_back({bound, n, t, r, std::move(lhs), std::move(rhs)});
	};
	for (long n = 1; n <= n_max; ++n)
		for (long r = 0; r <= n; ++r)
			for (long t = 2 * r; t <= 2 * n; ++t) {
				++report.cells_checked;
				Rational a = a_rnt(tri, n, t, r);
				Rational xr = x.at(r) * x.at(t - r);
				record("scaled-x", n, t, r, a_rnt(b, n, t, r), a * xr);
				if (t <= n + r) {
					Rational yr = y.at(n - t + r) * y.at(n - r);
					Rational c_val = a_rnt(c, n, t, r);
					record("scaled-y", n, t, r, c_val, a * yr);
					Rational gamma = tri.at(n + 1, r) * tri.at(n - 1, t - r);
					Rational yr_prev = y.at(n - t + r - 1) * y.at(n - r + 1);
					record("scaled-y-refined", n, t, r, c_val, a * yr + gamma * (yr - yr_prev));
					record("scaled-xy", n, t, r, a_rnt(d, n, t, r), a * xr * yr);
				}
			}
	return report;
}

RemBoundReport check_rem_bound(const LOperatorSpec& spec, long top_n) {
	if (top_n < 2)
		throw std::invalid_argument("check_rem_bound needs top_n >= 2");
	Triangle tri = loperator_triangle(spec, top_n);
	std::vector<Sequence> rows = loperator_rows(spec, top_n);
	Rational mu2 = spec.mu * spec.mu;

	RemBoundReport report;
	for (long n = 1; n < top_n; ++n) {
		const Sequence& a = rows[n - 1];
		for (long r = 0; r <= n; ++r)
			for (long t = 2 * r; t <= std::min(2 * n, n + r); ++t) {
				Rational bound = (a.at(r - 1) * a.at(t - r - 1) - a.at(r - 2) * a.at(t - r)) * mu2;
				Rational value = a_rnt(tri, n, t, r);
				if (t < n + r) {
					++report.equality_cells;
					if (value != bound)
						report.violations.push_back({"tail-equality", n, t, r, value, bound});
				} else {
					++report.inequality_cells;
					if (value < bound)
						report.violations.push_back({"tail-inequality", n, t, r, value, bound});
				}
			}
	}
	return report;
}

}  // namespace lcpos
