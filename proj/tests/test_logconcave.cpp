#include "lcpos/falsifier.hpp"
#include "lcpos/logconcave.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace lcpos;

namespace {

Sequence seq(std::vector<long> values, long offset = 0) {
	std::vector<Rational> out(values.begin(), values.end());
	return Sequence(std::move(out), offset);
}

QPoly poly(std::vector<long> coeffs) {
	return QPoly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

// Every sequence of the given length with entries drawn from 0..max_value,
// enumerated like an odometer.
std::vector<Sequence> all_grids(long len, long max_value) {
	std::vector<Sequence> out;
	std::vector<long> digits(len, 0);
	while (true) {
		out.push_back(seq(digits));
		long pos = 0;
		while (pos < len && digits[pos] == max_value)
			digits[pos++] = 0;
		if (pos == len)
			return out;
		++digits[pos];
	}
}

}  // namespace

TEST_CASE("three-term log-concavity accepts the textbook examples") {
	CHECK(is_log_concave(seq({1, 2, 3, 2, 1})));
	CHECK(is_log_concave(seq({1, 4, 6, 4, 1})));
	CHECK(is_log_concave(seq({2, 1})));
	CHECK(is_log_concave(seq({5})));
	CHECK(is_log_concave(Sequence()));
	CHECK(is_log_concave(seq({0, 0, 0})));
	// Leading and trailing zeros are not internal.
	CHECK(is_log_concave(seq({0, 1, 2, 1, 0})));
	// Shifting the window does not change the verdict.
	CHECK(is_log_concave(seq({1, 2, 1}, -5)));
}

TEST_CASE("three-term violations carry a reproducible witness") {
	CheckResult r = is_log_concave(seq({1, 0, 1}));
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1});
	CHECK(r.witness_value == -1);
	CHECK(r.reason == "inequality");

	// The inequalities hold but a zero sits strictly inside the support.
	r = is_log_concave(seq({1, 1, 0, 0, 1}));
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{2});
	CHECK(r.reason == "internal-zero");
	CHECK(is_log_concave(seq({1, 1, 0, 0, 1}), false));

	// Witness indices are absolute, not window-relative.
	r = is_log_concave(seq({1, 0, 1}, 3));
	CHECK(r.witness_index == std::vector<long>{4});
}

TEST_CASE("pairwise oracle pins the first violating pair") {
	CheckResult r = is_log_concave_pairs(seq({1, 1, 2}));
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1, 1});
	CHECK(r.witness_value == -1);

	r = is_log_concave_pairs(seq({1, 0, 1}));
	CHECK(r.witness_index == std::vector<long>{1, 1});

	// An internal zero run is caught by the pair bridging it.
	r = is_log_concave_pairs(seq({1, 1, 0, 0, 1}));
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1, 3});
	CHECK(r.witness_value == -1);

	CHECK(is_log_concave_pairs(seq({1, 3, 3, 1})));
	CHECK(is_log_concave_pairs(seq({0, 2, 4, 4, 0})));
}

TEST_CASE("pairwise and three-term verdicts agree on every small grid") {
	for (long len = 1; len <= 5; ++len)
		for (const Sequence& s : all_grids(len, 3)) {
			bool full = is_log_concave(s, true).ok;
			bool pairs = is_log_concave_pairs(s).ok;
			CAPTURE(len);
			REQUIRE(full == pairs);
		}
}

TEST_CASE("pairwise and three-term verdicts agree on random rational sequences") {
	GeneratorConfig cfg;
	for (long trial = 0; trial < 400; ++trial) {
		Rng rng(mix_seed(11, trial));
		long len = rng.uniform(1, 8);
		std::vector<Rational> values;
		for (long i = 0; i < len; ++i)
			values.push_back(rng.rational(4, 3, true));
		Sequence s(std::move(values), rng.uniform(-2, 2));
		CHECK(is_log_concave(s, true).ok == is_log_concave_pairs(s).ok);
		// Generated log-concave sequences must pass both forms.
		Sequence lc = random_log_concave_sequence(rng, cfg, len);
		CHECK(is_log_concave(lc));
		CHECK(is_log_concave_pairs(lc));
	}
}

TEST_CASE("ultra log-concavity at a finite order") {
	CHECK(is_ulc(seq({1, 3, 3, 1}), 3));
	CHECK(is_ulc(seq({1, 4, 6, 4, 1}), 4));
	CHECK(is_ulc(seq({0, 1, 2}), 2));

	// Log-concave but not ULC(2): the ratio sequence is (1, 1/2, 1).
	CheckResult r = is_ulc(seq({1, 1, 1}), 2);
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1});
	CHECK(r.witness_value == Rational(-3, 4));

	// Support outside [0, order].
	r = is_ulc(seq({1, 1, 1}), 1);
	CHECK(!r.ok);
	CHECK(r.reason == "support");
	CHECK(r.witness_index == std::vector<long>{2});
	r = is_ulc(seq({1, 1}, -1), 3);
	CHECK(r.reason == "support");
	CHECK(r.witness_index == std::vector<long>{-1});

	CHECK_THROWS_AS(is_ulc(seq({1}), -1), std::invalid_argument);
}

TEST_CASE("ultra log-concavity with unbounded order weights by k!") {
	CHECK(is_ulc(seq({1, 3, 3, 1}), std::nullopt));
	CHECK(is_ulc(seq({1, 1}), std::nullopt));
	// (1,1,1) weighted by k! gives (1,1,2): fails at index 1.
	CheckResult r = is_ulc(seq({1, 1, 1}), std::nullopt);
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1});
	CHECK(r.witness_value == -1);
}

TEST_CASE("ultra log-concavity chains upward in the order") {
	GeneratorConfig cfg;
	for (long trial = 0; trial < 60; ++trial) {
		Rng rng(mix_seed(12, trial));
		long order = rng.uniform(0, 5);
		Sequence s = random_ulc_sequence(rng, cfg, order);
		CAPTURE(order);
		REQUIRE(is_ulc(s, order));
		CHECK(is_ulc(s, order + 1));
		CHECK(is_ulc(s, order + 3));
		CHECK(is_ulc(s, std::nullopt));
	}
}

TEST_CASE("q-log-concavity over polynomial families") {
	// Rows of the binomial triangle: (1+q)^n, differences vanish identically.
	std::vector<QPoly> pascal{poly({1})};
	for (long n = 1; n <= 6; ++n)
		pascal.push_back(pascal.back() * poly({1, 1}));
	CHECK(is_q_log_concave(pascal));

	std::vector<QPoly> monomials{QPoly::monomial(0), QPoly::monomial(1), QPoly::monomial(2)};
	CHECK(is_q_log_concave(monomials));

	// (1+q)^2 - 1 * (2+q) = -1 + q + q^2: negative constant coefficient.
	std::vector<QPoly> bad{poly({1}), poly({1, 1}), poly({2, 1})};
	CheckResult r = is_q_log_concave(bad);
	CHECK(!r.ok);
	CHECK(r.witness_index == std::vector<long>{1, 0});
	CHECK(r.witness_value == -1);

	std::vector<QPoly> tiny{poly({1, 2})};
	CHECK(is_q_log_concave(tiny));
	CHECK_THROWS_AS(is_q_log_concave(std::vector<QPoly>{}), std::invalid_argument);
}
