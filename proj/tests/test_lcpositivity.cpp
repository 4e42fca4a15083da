#include "lcpos/falsifier.hpp"
#include "lcpos/lcpositivity.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace lcpos;

namespace {

Sequence seq(std::vector<long> values, long offset = 0) {
	std::vector<Rational> out(values.begin(), values.end());
	return Sequence(std::move(out), offset);
}

// Rows (1), (1,0), (1,1,1): the smallest triangle this file knows that is
// not LC-positive. A_0(1,1) = 2 a(1,0)a(1,1) - a(0,0)a(2,1) - a(2,0)a(0,1)
// = 0 - 1 - 0 = -1.
Triangle witness_triangle() {
	return Triangle({{1}, {1, 0}, {1, 1, 1}});
}

// Certificates from both routes, compared field by field.
void check_methods_agree(const Triangle& tri, long n_max) {
	LcCertificate a = check_lc_positive(tri, n_max, CertMethod::coefficient_formula);
	LcCertificate b = check_lc_positive(tri, n_max, CertMethod::polynomial_expansion);
	REQUIRE(a.holds == b.holds);
	REQUIRE(a.witness.has_value() == b.witness.has_value());
	if (a.witness) {
		CHECK(a.witness->r == b.witness->r);
		CHECK(a.witness->n == b.witness->n);
		CHECK(a.witness->t == b.witness->t);
		CHECK(a.witness->value == b.witness->value);
	}
}

}  // namespace

TEST_CASE("a_r_poly is the tail of the row generating polynomial") {
	Triangle pas = pascal_triangle(5);
	QPoly p = a_r_poly(pas, 2, 4);
	CHECK(p.coeff(0) == 0);
	CHECK(p.coeff(1) == 0);
	CHECK(p.coeff(2) == 6);
	CHECK(p.coeff(3) == 4);
	CHECK(p.coeff(4) == 1);
	CHECK(p.degree() == 4);
	CHECK(a_r_poly(pas, 0, 3).eval(1) == 8);

	// The tail past the end of a row is empty, hence the zero polynomial.
	CHECK(a_r_poly(pas, 3, 2) == QPoly());
	CHECK_THROWS_AS(a_r_poly(pas, -1, 2), std::out_of_range);
	CHECK_THROWS_AS(a_r_poly(pas, 0, 6), std::out_of_range);
}

TEST_CASE("a_coeff and a_rnt reject out-of-range cells") {
	Triangle pas = pascal_triangle(4);
	CHECK_THROWS_AS(a_coeff(pas, 0, 0, 0), std::out_of_range);
	CHECK_THROWS_AS(a_coeff(pas, 4, 0, 0), std::out_of_range);
	CHECK_THROWS_AS(a_coeff(pas, 2, 5, 0), std::out_of_range);
	CHECK_THROWS_AS(a_coeff(pas, 2, 2, 2), std::out_of_range);
	CHECK_THROWS_AS(a_rnt(pas, 2, 2, 2), std::out_of_range);
	CHECK_THROWS_AS(a_rnt(pas, 2, 1, -1), std::out_of_range);
}

TEST_CASE("the coefficient formula expands the polynomial difference exactly") {
	// For every triangle and every interior cell:
	//   A_r(n;q)^2 - A_r(n-1;q) A_r(n+1;q) = sum_t A_r(n,t) q^t.
	std::vector<Triangle> triangles{pascal_triangle(6), constant_triangle(6),
	                                shifted_binomial_triangle(4, 1, 6),
	                                falling_binomial_triangle(8, 3, 6), witness_triangle()};
	GeneratorConfig cfg;
	for (long trial = 0; trial < 40; ++trial) {
		Rng rng(mix_seed(21, trial));
		auto family = static_cast<TriangleFamily>(trial % 3);
		triangles.push_back(random_triangle(rng, cfg, rng.uniform(2, 6), family));
	}
	for (const Triangle& tri : triangles) {
		for (long n = 1; n <= tri.max_n() - 1; ++n)
			for (long r = 0; r <= n; ++r) {
				QPoly diff = qpoly_sub_mul(a_r_poly(tri, r, n), a_r_poly(tri, r, n - 1),
				                           a_r_poly(tri, r, n + 1));
				for (long t = 2 * r; t <= 2 * n; ++t)
					REQUIRE(diff.coeff(t) == a_rnt(tri, n, t, r));
				// Below 2r nothing is stored, so the expansion must vanish.
				for (long t = 0; t < 2 * r; ++t)
					REQUIRE(diff.coeff(t) == 0);
			}
	}
}

TEST_CASE("both certificate routes agree, witnesses included") {
	check_methods_agree(pascal_triangle(7), 6);
	check_methods_agree(witness_triangle(), 1);
	GeneratorConfig cfg;
	for (long trial = 0; trial < 60; ++trial) {
		Rng rng(mix_seed(22, trial));
		auto family = static_cast<TriangleFamily>(trial % 3);
		Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 6), family);
		check_methods_agree(tri, tri.max_n() - 1);
	}
}

TEST_CASE("the constant triangle concentrates all mass at t = n + r") {
	Triangle con = constant_triangle(8);
	for (long n = 1; n <= 7; ++n)
		for (long r = 0; r <= n; ++r)
			for (long t = 2 * r; t <= 2 * n; ++t)
				CHECK(a_rnt(con, n, t, r) == (t == n + r ? 1 : 0));
	CHECK(check_double_lc_positive(con, 7).holds());
}

TEST_CASE("the binomial triangle is double LC-positive with nonnegative sums") {
	Triangle pas = pascal_triangle(13);
	// Individual coefficients do go negative -- a_0(2,2) = 2*1*1 - 1*3 - 1*0.
	// Only the suffix sums A_r(n,t) are claimed nonnegative.
	CHECK(a_coeff(pas, 2, 2, 0) == -1);
	for (long n = 1; n <= 12; ++n)
		for (long r = 0; r <= n; ++r)
			for (long t = 2 * r; t <= 2 * n; ++t)
				CHECK(a_rnt(pas, n, t, r) >= 0);
	DoubleLcCertificate cert = check_double_lc_positive(pas, 12);
	CHECK(cert.holds());
	CHECK(cert.direct.n_max == 12);
	CHECK(!cert.direct.witness);
	CHECK(check_double_lc_positive(pas, 12, CertMethod::polynomial_expansion).holds());
}

TEST_CASE("violations come back as the lexicographically first witness") {
	LcCertificate cert = check_lc_positive(witness_triangle(), 1);
	REQUIRE(!cert.holds);
	REQUIRE(cert.witness.has_value());
	CHECK(cert.witness->r == 0);
	CHECK(cert.witness->n == 1);
	CHECK(cert.witness->t == 1);
	CHECK(cert.witness->value == -1);
	CHECK(cert_method_name(cert.method) == "coefficient-formula");

	LcCertificate poly = check_lc_positive(witness_triangle(), 1, CertMethod::polynomial_expansion);
	CHECK(poly.witness->t == 1);
	CHECK(cert_method_name(poly.method) == "polynomial-expansion");

	CHECK_THROWS_AS(check_lc_positive(witness_triangle(), 2), std::invalid_argument);
	CHECK_THROWS_AS(check_lc_positive(witness_triangle(), -1), std::invalid_argument);
	// n_max = 0 scans nothing and holds vacuously.
	CHECK(check_lc_positive(witness_triangle(), 0).holds);
}

TEST_CASE("sign-pattern and q-log-concavity screens") {
	ConditionsAbReport good = check_conditions_ab(pascal_triangle(9), 8);
	CHECK(good.condition_a.ok);
	CHECK(good.condition_b.ok);
	CHECK(good.holds());
	CHECK(good.lc_positivity_confirmed);

	ConditionsAbReport constant = check_conditions_ab(constant_triangle(9), 8);
	CHECK(constant.holds());
	CHECK(constant.lc_positivity_confirmed);

	// Rows (1),(1,0),(1,1,1): every coefficient list is nonpositive before it
	// is nonnegative, so the sign screen passes; the q-log-concavity screen
	// catches the failure at n = 1, power 1.
	ConditionsAbReport mixed = check_conditions_ab(witness_triangle(), 1);
	CHECK(mixed.condition_a.ok);
	CHECK(!mixed.condition_b.ok);
	CHECK(mixed.condition_b.witness_index == std::vector<long>{1, 1});
	CHECK(mixed.condition_b.witness_value == -1);
	CHECK(!mixed.holds());
	CHECK(!mixed.lc_positivity_confirmed);

	// Hand-built rows whose (n,t) = (3,2) coefficient list is (6, -15): a
	// strict positive followed by a strict negative trips the sign screen.
	Triangle bad({{1}, {1, 1}, {1, 4, 1}, {2, 1, 2, 1}, {1, 4, 1, 1, 1}});
	ConditionsAbReport report = check_conditions_ab(bad, 3);
	CHECK(!report.condition_a.ok);
	CHECK(report.condition_a.witness_index == std::vector<long>{3, 2, 1});
	CHECK(report.condition_a.witness_value == -15);
	CHECK(!report.condition_b.ok);
	CHECK(report.condition_b.witness_index == std::vector<long>{1, 1});
	CHECK(report.condition_b.witness_value == -2);
}

TEST_CASE("necessary screens accept certified families and reject quick fakes") {
	NecessaryConditionsReport pas = necessary_conditions(pascal_triangle(9), 8);
	CHECK(pas.holds());
	CHECK(pas.samples.size() == 4);  // the default sample set

	NecessaryConditionsReport scaled =
	    necessary_conditions(pascal_triangle(7), 6, {Rational(1, 3), Rational(5)});
	CHECK(scaled.holds());
	CHECK(scaled.samples.size() == 2);

	// Column 0 is (1, 1, 4): not log-concave at n = 1; the row sums (1, 2, 6)
	// fail at the same spot.
	Triangle bad({{1}, {1, 1}, {4, 1, 1}});
	NecessaryConditionsReport report = necessary_conditions(bad, 2);
	CHECK(!report.holds());
	CHECK(!report.columns.ok);
	CHECK(report.columns.witness_index == std::vector<long>{0, 1});
	CHECK(report.columns.witness_value == -3);
	CHECK(!report.row_sums.ok);
	CHECK(report.row_sums.witness_index == std::vector<long>{1});
	CHECK(report.row_sums.witness_value == -2);
	CHECK(report.diagonal.ok);

	CHECK_THROWS_AS(necessary_conditions(bad, 2, {Rational(0)}), std::invalid_argument);
	CHECK_THROWS_AS(necessary_conditions(bad, 2, {Rational(-1)}), std::invalid_argument);
	CHECK_THROWS_AS(necessary_conditions(bad, 5), std::invalid_argument);
}

TEST_CASE("a failed necessary screen always means a negative certificate cell") {
	// Soundness of the screens: whenever one fails, the full certificate must
	// fail too (the converse is false, so only this direction is asserted).
	GeneratorConfig cfg;
	long failures = 0;
	for (long trial = 0; trial < 80; ++trial) {
		Rng rng(mix_seed(23, trial));
		Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 5), TriangleFamily::arbitrary);
		long n_max = tri.max_n() - 1;
		if (!necessary_conditions(tri, n_max).holds()) {
			++failures;
			CHECK(!check_lc_positive(tri, n_max).holds);
		}
	}
	CHECK(failures > 0);  // the arbitrary family must exercise the implication
}

TEST_CASE("scaled-triangle lower bounds hold for certified inputs") {
	BasicBoundsReport report = check_basic_bounds(pascal_triangle(6), seq({1, 2, 2, 1}),
	                                              seq({1, 1, 1, 1}), 5);
	CHECK(report.holds());
	CHECK(report.cells_checked > 0);

	BasicBoundsReport lop = check_basic_bounds(
	    loperator_triangle(LOperatorSpec(Rational(1, 2), 1, seq({1, 2, 1})), 5),
	    seq({2, 3, 3, 2}), seq({1, 2, 1}), 4);
	CHECK(lop.holds());

	// Preconditions: certified triangle, log-concave x and y.
	CHECK_THROWS_AS(check_basic_bounds(witness_triangle(), seq({1, 1}), seq({1, 1}), 1),
	                std::invalid_argument);
	CHECK_THROWS_AS(check_basic_bounds(pascal_triangle(4), seq({1, 0, 1}), seq({1, 1}), 3),
	                std::invalid_argument);
	CHECK_THROWS_AS(check_basic_bounds(pascal_triangle(4), seq({1, 1}), seq({1, 0, 1}), 3),
	                std::invalid_argument);
}

TEST_CASE("tail coefficients collapse onto the previous operator row") {
	RemBoundReport impulse = check_rem_bound(LOperatorSpec(1, 1, Sequence::impulse()), 6);
	CHECK(impulse.holds());
	CHECK(impulse.equality_cells > 0);
	CHECK(impulse.inequality_cells > 0);

	RemBoundReport weighted =
	    check_rem_bound(LOperatorSpec(Rational(1, 2), 3, seq({1, 2, 1}, -1)), 5);
	CHECK(weighted.holds());

	CHECK_THROWS_AS(check_rem_bound(LOperatorSpec(1, 1, Sequence::impulse()), 1),
	                std::invalid_argument);
}
