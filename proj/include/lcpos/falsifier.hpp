#pragma once

#include "lcpos/json_io.hpp"
#include "lcpos/lcpositivity.hpp"
#include "lcpos/transforms.hpp"
#include "lcpos/triangle.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcpos {

// splitmix64. Chosen because the stream is fully pinned by the algorithm --
// no standard-library distribution whose output may change between platforms
// ever touches a generated value, so a (seed, trial) pair names the same
// inputs everywhere, forever.
class Rng {
 public:
	explicit Rng(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next();
	// Inclusive on both ends.
	long uniform(long lo, long hi);
	// Numerator in [0 or 1, max_num], denominator in [1, max_den].
	Rational rational(long max_num, long max_den, bool allow_zero);

 private:
	std::uint64_t state_;
};

// Stable derivation of the per-trial seed; trials are independent streams,
// so a search evaluates identically no matter how trials are scheduled
// across threads.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

struct GeneratorConfig {
	std::uint64_t seed = 20260814;
	long min_len = 1;
	long max_len = 8;
	// Caps numerators and denominators of generated values and ratios.
	long bound = 4;
	bool allow_trailing_zeros = true;
};

// Positive head, then multiply by a nonincreasing chain of ratios, which is
// exactly log-concavity; a zero ratio (only when allowed) sorts to the end
// and produces trailing zeros, never internal ones.
Sequence random_log_concave_sequence(Rng& rng, const GeneratorConfig& cfg, long len);

// Ultra-log-concave of the given order by construction: a log-concave core
// of length <= order + 1, multiplied entrywise by C(order, k).
Sequence random_ulc_sequence(Rng& rng, const GeneratorConfig& cfg, long order);

enum class TriangleFamily {
	arbitrary,         // independent nonnegative entries, zeros included
	row_log_concave,   // every row log-concave, no internal zeros
	certified,         // one of the closed-form families with a positivity theorem
};

Triangle random_triangle(Rng& rng, const GeneratorConfig& cfg, long max_n,
                         TriangleFamily family);

// The hypotheses this library can hunt counterexamples for. Names are the
// CLI spelling.
enum class Claim {
	linear_transform_lc,            // LC-positive triangle maps LC x to LC z
	bilinear_transform_lc,          // double LC-positive triangle, two LC inputs
	loperator_double_lc_positive,   // row-operator triangles are double LC-positive
	recurrence_double_lc_positive,  // recurrence triangles are double LC-positive
	liggett,                        // the generalized shuffle inequality
	ordinary_convolution_lc,        // LC * LC stays LC
	shifted_binomial_transform_lc,  // C(a+n,b+k) bilinear transform stays LC
	binomial_convolution_lc,        // binomial convolution of LC stays LC
	falling_binomial_transform_lc,  // C(a-n,b-k) bilinear transform stays LC
	multinomial_transform_lc,       // iterated binomial convolution stays LC
	pemantle_ulc,                   // ULC(m) * ULC(l) lands in ULC(m+l)
	product_double_lc_positive,     // entrywise products stay double LC-positive (they don't)
	product_double_plc,             // ...but their bilinear transforms still preserve LC
};

std::string claim_name(Claim claim);
std::optional<Claim> claim_from_name(std::string_view name);
const std::vector<Claim>& all_claims();

struct SearchOptions {
	long threads = 1;
	// Deliberately drop one hypothesis per trial (non-log-concave inputs and
	// the like) to demonstrate the check can fail. Supported for the claims
	// with a known violating construction; trial 0 is a pinned deterministic
	// hit so any budget >= 1 finds one.
	bool break_hypothesis = false;
	// Enumerate small integer grids instead of random sampling (convolution
	// claims only).
	bool exhaustive = false;
};

// The report is exactly what a serial scan of trials 0, 1, 2, ... up to the
// first violation (or the budget) would produce: the lowest violating trial
// index wins and `trials` counts the serial prefix. Parallel scheduling is an
// implementation detail and cannot change any report field, because each
// trial's inputs are a pure function of (config.seed, trial). A found
// counterexample is re-verified from its own serialized bundle before the
// report is returned.
struct SearchReport {
	Claim claim = Claim::liggett;
	long budget = 0;
	long trials = 0;  // candidates actually evaluated
	std::uint64_t seed = 0;
	bool broke_hypothesis = false;
	bool exhaustive = false;
	GeneratorConfig config;
	bool found = false;
	long found_trial = -1;
	ojson counterexample;  // null when none; self-contained re-runnable bundle
};

SearchReport search_counterexample(Claim claim, long budget, const GeneratorConfig& cfg,
                                   const SearchOptions& options = {});

ojson search_report_to_json(const SearchReport& report);

// Rebuilds the inputs recorded in a serialized report and re-runs the
// claim's defining check. Returns true when the recorded outcome is
// reproduced (reports with no counterexample verify trivially).
bool reverify_search_report(const ojson& report);

// Expansion of z_n^2 - z_{n-1} z_{n+1} for z = linear_transform(tri, x) as a
// quadratic form in the x_i, bucketed by total weight t = i + j:
//   delta = sum_t S_t,  S_t = sum_{i <= j, i+j=t} coefficients[(i,j)] x_i x_j.
// The computation cross-checks itself: each coefficient must equal the
// closed-form a_coeff cell and the bucket sums must add up to the directly
// computed delta; a mismatch throws logic_error. Requires 1 <= n <= max_n-1.
struct DeltaReport {
	long n = 0;
	Rational delta;
	std::map<long, Rational> weight_sums;
	std::map<std::pair<long, long>, Rational> coefficients;
};

DeltaReport brute_force_delta(const Triangle& tri, const Sequence& x, long n);

ojson delta_report_to_json(const DeltaReport& report);

}  // namespace lcpos
