#include "lcpos/falsifier.hpp"
#include "lcpos/logconcave.hpp"
#include "lcpos/transforms.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace lcpos;

namespace {

Sequence seq(std::vector<long> values, long offset = 0) {
	std::vector<Rational> out(values.begin(), values.end());
	return Sequence(std::move(out), offset);
}

Sequence ones(long count, long offset = 0) {
	return Sequence(std::vector<Rational>(count, Rational(1)), offset);
}

// Direct multinomial sum: z_n = sum_{k_1+...+k_l=n} n!/(k_1!...k_l!) prod x_i(k_i),
// computed as nested binomial choices C(rem, k) without touching the
// implementation under test.
Rational multinomial_oracle(const std::vector<Sequence>& xs, long i, long rem) {
	if (i == static_cast<long>(xs.size()))
		return rem == 0 ? 1 : 0;
	Rational out = 0;
	for (long k = 0; k <= rem; ++k)
		out += Rational(binomial(rem, k)) * xs[i].at(k) * multinomial_oracle(xs, i + 1, rem - k);
	return out;
}

LiggettInstance random_liggett_instance(Rng& rng, long max_center) {
	GeneratorConfig cfg;
	Sequence u = random_log_concave_sequence(rng, cfg, rng.uniform(1, 4));
	u = Sequence(u.values(), rng.uniform(-2, 1));
	Sequence v = random_log_concave_sequence(rng, cfg, rng.uniform(1, 6));
	Sequence x = random_log_concave_sequence(rng, cfg, rng.uniform(1, 6));
	Sequence y = random_log_concave_sequence(rng, cfg, rng.uniform(1, 6));
	return LiggettInstance(rng.rational(4, 3, true), rng.rational(4, 3, true),
	                       rng.rational(4, 3, true), rng.rational(4, 3, true), u, v, x, y,
	                       rng.uniform(1, max_center));
}

}  // namespace

TEST_CASE("linear transform fixtures and zero extension") {
	CHECK(linear_transform(constant_triangle(3), seq({1, 2, 1}), 2) == seq({1, 3, 4}));
	CHECK(linear_transform(pascal_triangle(3), seq({1, 1, 1}), 3) == seq({1, 2, 4, 7}));
	// Entries of x at negative indices are never read.
	CHECK(linear_transform(constant_triangle(3), seq({1, 2}, -1), 2) == seq({2, 2, 2}));
	CHECK(linear_transform(pascal_triangle(3), Sequence(), 2) == seq({0, 0, 0}));
	CHECK_THROWS_AS(linear_transform(pascal_triangle(3), ones(2), 4), std::out_of_range);
	CHECK_THROWS_AS(linear_transform(pascal_triangle(3), ones(2), -1), std::out_of_range);
}

TEST_CASE("bilinear transform fixtures") {
	CHECK(bilinear_transform(pascal_triangle(3), ones(4), ones(4), 3) == seq({1, 2, 4, 8}));
	// z_n = sum_k C(n,k) x_k y_{n-k} with x = (1,2), y = (1,3):
	// z_0 = 1, z_1 = 1*3 + 2 = 5, z_2 = (0 + 2*3*2 + 0)... spelled out below.
	Sequence z = bilinear_transform(pascal_triangle(3), seq({1, 2}), seq({1, 3}), 3);
	CHECK(z.at(0) == 1);
	CHECK(z.at(1) == 5);   // 1*1*3 + 1*2*1
	CHECK(z.at(2) == 12);  // 1*1*0 + 2*2*3 + 1*0*1
	CHECK(z.at(3) == 0);   // all products involve a vanished entry
}

TEST_CASE("ordinary convolution adds offsets and supports") {
	CHECK(ordinary_convolution(seq({1, 2, 1}), seq({1, 1})) == seq({1, 3, 3, 1}));
	Sequence shifted = ordinary_convolution(seq({1, 2}, -1), seq({3}, 2));
	CHECK(shifted == seq({3, 6}, 1));
	CHECK(ordinary_convolution(Sequence(), seq({1, 2})).empty());
	// Convolution against the impulse is the identity.
	Sequence x = seq({2, 5, 1}, -2);
	CHECK(ordinary_convolution(x, Sequence::impulse()) == x);
}

TEST_CASE("binomial convolution weights by C(n,k)") {
	CHECK(binomial_convolution(seq({1, 1}), seq({1, 2, 1})) == seq({1, 3, 5, 3}));
	CHECK(binomial_convolution(seq({1, 1}), seq({1, 2, 1})) ==
	      binomial_convolution(seq({1, 2, 1}), seq({1, 1})));
	CHECK(binomial_convolution(seq({1, 1, 1}), Sequence()).empty());
	CHECK_THROWS_AS(binomial_convolution(seq({1, 1}, -1), seq({1})), std::invalid_argument);
	CHECK_THROWS_AS(binomial_convolution(seq({1}), seq({1, 1}, -1)), std::invalid_argument);

	// Exponential generating functions multiply: for x_k = 2^k and y_k = 3^k
	// the binomial theorem gives z_n = 5^n on the full-support prefix.
	Sequence z = binomial_convolution(seq({1, 2, 4, 8}), seq({1, 3, 9, 27}));
	CHECK(z.size() == 7);
	CHECK(Sequence({z.at(0), z.at(1), z.at(2), z.at(3)}, 0) == seq({1, 5, 25, 125}));
	// Past the prefix the supports truncate the sum; pin one value by hand:
	// z_6 = C(6,3) * 8 * 27.
	CHECK(z.at(6) == 4320);
}

TEST_CASE("multinomial transform equals the direct multinomial sum") {
	GeneratorConfig cfg;
	for (long trial = 0; trial < 40; ++trial) {
		Rng rng(mix_seed(31, trial));
		long count = rng.uniform(1, 4);
		std::vector<Sequence> xs;
		for (long i = 0; i < count; ++i)
			xs.push_back(random_log_concave_sequence(rng, cfg, rng.uniform(1, 4)));
		long n_max = rng.uniform(0, 8);
		Sequence z = multinomial_transform(xs, n_max);
		CHECK(z.offset() == 0);
		CHECK(z.size() == n_max + 1);
		for (long n = 0; n <= n_max; ++n)
			REQUIRE(z.at(n) == multinomial_oracle(xs, 0, n));
	}
	// A single sequence folds to itself (truncated or padded).
	CHECK(multinomial_transform({seq({4, 2, 1})}, 1) == seq({4, 2}));
	CHECK(multinomial_transform({seq({4, 2})}, 3) == seq({4, 2, 0, 0}));
	CHECK_THROWS_AS(multinomial_transform({}, 3), std::invalid_argument);
	CHECK_THROWS_AS(multinomial_transform({seq({1}, -1)}, 3), std::invalid_argument);
	CHECK_THROWS_AS(multinomial_transform({seq({1})}, -1), std::invalid_argument);
}

TEST_CASE("all-ones shuffle instance sits exactly at equality") {
	for (long n = 1; n <= 6; ++n) {
		LiggettInstance inst(1, 1, 1, 1, Sequence::impulse(), ones(n + 3), ones(n + 3),
		                     ones(n + 3), n);
		LiggettResult result = liggett_triple(inst);
		CHECK(result.holds);
		Rational expected = Rational(Integer(1) << (n + 1));
		CHECK(result.z_prev == expected);
		CHECK(result.z_mid == expected);
		CHECK(result.z_next == expected);
	}
}

TEST_CASE("shuffle instance validation") {
	Sequence u = Sequence::impulse();
	CHECK_THROWS_AS(LiggettInstance(-1, 1, 1, 1, u, ones(3), ones(3), ones(3), 2),
	                std::invalid_argument);
	CHECK_THROWS_AS(LiggettInstance(1, 1, -1, 1, u, ones(3), ones(3), ones(3), 2),
	                std::invalid_argument);
	CHECK_THROWS_AS(LiggettInstance(1, 1, 1, 1, seq({1, 0, 1}), ones(3), ones(3), ones(3), 2),
	                std::invalid_argument);
	CHECK_THROWS_AS(LiggettInstance(1, 1, 1, 1, u, seq({1, 0, 1}), ones(3), ones(3), 2),
	                std::invalid_argument);
	CHECK_THROWS_AS(LiggettInstance(1, 1, 1, 1, u, seq({1, 1}, -1), ones(3), ones(3), 2),
	                std::invalid_argument);
	CHECK_THROWS_AS(LiggettInstance(1, 1, 1, 1, u, ones(3), ones(3), ones(3), 0),
	                std::invalid_argument);
}

TEST_CASE("the triple is the bilinear transform of a product triangle") {
	// Multiply the operator triangle entrywise with the recurrence triangle
	// seeded by v: rows N-1, N, N+1 of the bilinear transform must reproduce
	// the three weighted sums. This re-derives liggett_triple through two
	// independent constructions.
	for (long trial = 0; trial < 30; ++trial) {
		Rng rng(mix_seed(32, trial));
		LiggettInstance inst = random_liggett_instance(rng, 5);
		long top = inst.n + 1;

		std::vector<Rational> padded;
		for (long k = 0; k <= top; ++k)
			padded.push_back(inst.v.at(k));
		// A recurrence top row must carry no internal zeros; the truncation
		// can create one only by cutting a run short, which trailing support
		// of v cannot do (v itself has none). Guard anyway.
		if (!is_log_concave(Sequence(padded), true))
			continue;

		Triangle operator_part =
		    loperator_triangle(LOperatorSpec(inst.lambda, inst.mu, inst.u), top);
		Triangle weight_part = recurrence_triangle(inst.alpha, inst.beta, Sequence(padded), top);
		Triangle product = entrywise_product(operator_part, weight_part);
		Sequence z = bilinear_transform(product, inst.x, inst.y, top);

		LiggettResult triple = liggett_triple(inst);
		CHECK(z.at(inst.n - 1) == triple.z_prev);
		CHECK(z.at(inst.n) == triple.z_mid);
		CHECK(z.at(inst.n + 1) == triple.z_next);
	}
}

TEST_CASE("random shuffle instances satisfy the inequality") {
	for (long trial = 0; trial < 300; ++trial) {
		Rng rng(mix_seed(33, trial));
		LiggettInstance inst = random_liggett_instance(rng, 6);
		LiggettResult result = liggett_triple(inst);
		CAPTURE(trial);
		REQUIRE(result.holds);
		REQUIRE(result.z_mid * result.z_mid - result.z_prev * result.z_next >= 0);
	}
}

TEST_CASE("pqr cell enumeration covers exactly the admissible pairs") {
	auto cells = pqr_cells(4);
	std::vector<std::pair<long, long>> expected{{3, 1}, {5, 1}, {5, 2}, {7, 3}};
	CHECK(cells == expected);
	CHECK(pqr_cells(1) == std::vector<std::pair<long, long>>{});

	LiggettInstance inst(1, 1, 1, 1, Sequence::impulse(), ones(8), ones(8), ones(8), 4);
	CHECK_THROWS_AS(pqr_decomposition(inst, 4, 1), std::invalid_argument);  // even t
	CHECK_THROWS_AS(pqr_decomposition(inst, 3, 0), std::invalid_argument);  // r = 0
	CHECK_THROWS_AS(pqr_decomposition(inst, 3, 2), std::invalid_argument);  // 2r > t
	CHECK_THROWS_AS(pqr_decomposition(inst, 9, 1), std::invalid_argument);  // t > n + r
}

TEST_CASE("pqr decomposition closes every odd-weight cell") {
	std::vector<LiggettInstance> instances;
	instances.emplace_back(1, 1, 1, 1, Sequence::impulse(), ones(9), ones(9), ones(9), 4);
	instances.emplace_back(Rational(1, 2), 2, 2, Rational(1, 3), seq({1, 2, 1}, -1),
	                       seq({2, 3, 2}), seq({1, 2, 2, 1}), seq({3, 3, 1}), 4);
	instances.emplace_back(1, 0, 1, 1, seq({1, 1}), seq({1}), ones(5), seq({2, 1}), 3);
	for (long trial = 0; trial < 15; ++trial) {
		Rng rng(mix_seed(34, trial));
		instances.push_back(random_liggett_instance(rng, 5));
	}
	for (const LiggettInstance& inst : instances) {
		for (auto [t, r] : pqr_cells(inst.n)) {
			PqrReport report = pqr_decomposition(inst, t, r);
			CAPTURE(t);
			CAPTURE(r);
			REQUIRE(report.identities_hold);
			REQUIRE(report.e_bounds_hold);
			REQUIRE(report.a_bounds_hold);
			REQUIRE(report.amgm_holds);
			REQUIRE(report.holds());
			CHECK(report.p_sum == report.p_expected);
			CHECK(report.q_sum == report.q_expected);
			CHECK(report.r_sum == report.r_expected);
			// The closing step spelled out.
			Rational closing = inst.alpha * inst.alpha * report.p_sum +
			                   2 * inst.alpha * inst.beta * report.q_sum +
			                   inst.beta * inst.beta * report.r_sum;
			CHECK(closing >= 0);
		}
	}
}
