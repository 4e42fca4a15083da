#include "lcpos/falsifier.hpp"

#include "lcpos/logconcave.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lcpos {

std::uint64_t Rng::next() {
	state_ += 0x9E3779B97F4A7C15ull;
	std::uint64_t z = state_;
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
	return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
	if (hi < lo)
		throw std::invalid_argument("uniform range is empty");
	return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::rational(long max_num, long max_den, bool allow_zero) {
	long num = uniform(allow_zero ? 0 : 1, max_num);
	long den = uniform(1, max_den);
	return Rational(num, den);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
	Rng r(seed ^ (0xA0761D6478BD642Full * (stream + 1)));
	r.next();
	return r.next();
}

Sequence random_log_concave_sequence(Rng& rng, const GeneratorConfig& cfg, long len) {
	if (len < 1)
		throw std::invalid_argument("sequence length must be at least 1");
	std::vector<Rational> ratios;
	ratios.reserve(len - 1);
	for (long i = 0; i + 1 < len; ++i)
		ratios.push_back(rng.rational(cfg.bound, cfg.bound, cfg.allow_trailing_zeros));
	std::sort(ratios.begin(), ratios.end(), std::greater<Rational>());
	std::vector<Rational> vals;
	vals.reserve(len);
	vals.push_back(rng.rational(cfg.bound, cfg.bound, false));
	for (const Rational& r : ratios)
		vals.push_back(vals.back() * r);
	return Sequence(std::move(vals), 0);
}

Sequence random_ulc_sequence(Rng& rng, const GeneratorConfig& cfg, long order) {
	if (order < 0)
		throw std::invalid_argument("ulc order must be nonnegative");
	Sequence core = random_log_concave_sequence(rng, cfg, rng.uniform(1, order + 1));
	std::vector<Rational> vals;
	vals.reserve(core.size());
	for (long k = 0; k < core.size(); ++k)
		vals.push_back(core.values()[k] * Rational(binomial(order, k)));
	return Sequence(std::move(vals), 0);
}

Triangle random_triangle(Rng& rng, const GeneratorConfig& cfg, long max_n,
                         TriangleFamily family) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	switch (family) {
		case TriangleFamily::arbitrary: {
			std::vector<std::vector<Rational>> rows(max_n + 1);
			for (long n = 0; n <= max_n; ++n)
				for (long k = 0; k <= n; ++k)
					rows[n].push_back(rng.rational(cfg.bound, cfg.bound, true));
			return Triangle(std::move(rows), {"random", {{"family", "arbitrary"}}});
		}
		case TriangleFamily::row_log_concave: {
			std::vector<std::vector<Rational>> rows(max_n + 1);
			for (long n = 0; n <= max_n; ++n)
				rows[n] = random_log_concave_sequence(rng, cfg, n + 1).values();
			return Triangle(std::move(rows), {"random", {{"family", "row-log-concave"}}});
		}
		case TriangleFamily::certified:
			break;
	}
	switch (rng.uniform(0, 5)) {
		case 0:
			return constant_triangle(max_n);
		case 1:
			return pascal_triangle(max_n);
		case 2: {
			long a = rng.uniform(0, 6);
			return shifted_binomial_triangle(a, rng.uniform(0, a), max_n);
		}
		case 3: {
			long a = max_n + rng.uniform(0, 4);
			return falling_binomial_triangle(a, rng.uniform(0, a), max_n);
		}
		case 4: {
			Rational lambda = rng.rational(cfg.bound, cfg.bound, true);
			Rational mu = rng.rational(cfg.bound, cfg.bound, true);
			Sequence u = random_log_concave_sequence(rng, cfg, rng.uniform(1, 4));
			Sequence shifted(u.values(), rng.uniform(-2, 1));
			return loperator_triangle(LOperatorSpec(lambda, mu, shifted), max_n);
		}
		default: {
			Rational alpha = rng.rational(cfg.bound, cfg.bound, true);
			Rational beta = rng.rational(cfg.bound, cfg.bound, true);
			Sequence top = random_log_concave_sequence(rng, cfg, max_n + 1);
			return recurrence_triangle(alpha, beta, top, max_n);
		}
	}
}

std::string claim_name(Claim claim) {
	switch (claim) {
		case Claim::linear_transform_lc: return "linear-transform-lc";
		case Claim::bilinear_transform_lc: return "bilinear-transform-lc";
		case Claim::loperator_double_lc_positive: return "loperator-double-lc-positive";
		case Claim::recurrence_double_lc_positive: return "recurrence-double-lc-positive";
		case Claim::liggett: return "liggett";
		case Claim::ordinary_convolution_lc: return "ordinary-convolution-lc";
		case Claim::shifted_binomial_transform_lc: return "shifted-binomial-transform-lc";
		case Claim::binomial_convolution_lc: return "binomial-convolution-lc";
		case Claim::falling_binomial_transform_lc: return "falling-binomial-transform-lc";
		case Claim::multinomial_transform_lc: return "multinomial-transform-lc";
		case Claim::pemantle_ulc: return "pemantle-ulc";
		case Claim::product_double_lc_positive: return "product-double-lc-positive";
		case Claim::product_double_plc: return "product-double-plc";
	}
	throw std::logic_error("unhandled claim");
}

const std::vector<Claim>& all_claims() {
	static const std::vector<Claim> claims = {
	    Claim::linear_transform_lc,           Claim::bilinear_transform_lc,
	    Claim::loperator_double_lc_positive,  Claim::recurrence_double_lc_positive,
	    Claim::liggett,                       Claim::ordinary_convolution_lc,
	    Claim::shifted_binomial_transform_lc, Claim::binomial_convolution_lc,
	    Claim::falling_binomial_transform_lc, Claim::multinomial_transform_lc,
	    Claim::pemantle_ulc,                  Claim::product_double_lc_positive,
	    Claim::product_double_plc,
	};
	return claims;
}

std::optional<Claim> claim_from_name(std::string_view name) {
	for (Claim claim : all_claims())
		if (claim_name(claim) == name)
			return claim;
	return std::nullopt;
}

namespace {

bool supports_broken(Claim claim) {
	switch (claim) {
		case Claim::linear_transform_lc:
		case Claim::bilinear_transform_lc:
		case Claim::ordinary_convolution_lc:
		case Claim::binomial_convolution_lc:
		case Claim::pemantle_ulc:
			return true;
		default:
			return false;
	}
}

// Log-concave head, a short run of zeros, log-concave tail: violates the
// no-internal-zeros hypothesis while every entry stays nonnegative.
Sequence spiky_sequence(Rng& rng, const GeneratorConfig& cfg) {
	GeneratorConfig solid = cfg;
	solid.allow_trailing_zeros = false;
	Sequence head = random_log_concave_sequence(rng, solid, rng.uniform(1, 3));
	long gap = rng.uniform(1, 2);
	Sequence tail = random_log_concave_sequence(rng, solid, rng.uniform(1, 3));
	std::vector<Rational> vals = head.values();
	vals.insert(vals.end(), gap, Rational(0));
	vals.insert(vals.end(), tail.values().begin(), tail.values().end());
	return Sequence(std::move(vals), 0);
}

Sequence int_sequence(std::vector<long> vals) {
	std::vector<Rational> out(vals.begin(), vals.end());
	return Sequence(std::move(out), 0);
}

long random_len(Rng& rng, const GeneratorConfig& cfg) {
	return rng.uniform(cfg.min_len, cfg.max_len);
}

ojson bundle(long trial, ojson inputs, ojson violation) {
	ojson out;
	out["trial"] = trial;
	out["inputs"] = std::move(inputs);
	out["violation"] = std::move(violation);
	return out;
}

std::optional<ojson> check_transform(long trial, const Triangle& tri, const Sequence& x,
                                     const Sequence* y, long n_max) {
	Sequence z = y ? bilinear_transform(tri, x, *y, n_max) : linear_transform(tri, x, n_max);
	CheckResult lc = is_log_concave(z, true);
	if (lc.ok)
		return std::nullopt;
	ojson inputs;
	inputs["triangle"] = triangle_to_json(tri);
	inputs["x"] = sequence_to_json(x);
	if (y)
		inputs["y"] = sequence_to_json(*y);
	inputs["n_max"] = n_max;
	return bundle(trial, std::move(inputs),
	              {{"z", sequence_to_json(z)}, {"check", check_result_to_json(lc)}});
}

std::optional<ojson> check_double_cert(long trial, const Triangle& tri, long n_max,
                                       ojson extra_inputs = ojson::object()) {
	DoubleLcCertificate cert = check_double_lc_positive(tri, n_max);
	if (cert.holds())
		return std::nullopt;
	ojson inputs = std::move(extra_inputs);
	inputs["triangle"] = triangle_to_json(tri);
	inputs["n_max"] = n_max;
	return bundle(trial, std::move(inputs),
	              {{"certificates", double_certificate_to_json(cert)}});
}

std::optional<ojson> check_convolution(long trial, bool binomial_kind, const Sequence& x,
                                       const Sequence& y) {
	Sequence z = binomial_kind ? binomial_convolution(x, y) : ordinary_convolution(x, y);
	CheckResult lc = is_log_concave(z, true);
	if (lc.ok)
		return std::nullopt;
	return bundle(trial, {{"x", sequence_to_json(x)}, {"y", sequence_to_json(y)}},
	              {{"z", sequence_to_json(z)}, {"check", check_result_to_json(lc)}});
}

std::optional<ojson> trial_linear(Rng& rng, const GeneratorConfig& cfg, long trial,
                                  bool broken) {
	if (broken) {
		if (trial == 0)
			return check_transform(trial, constant_triangle(3), int_sequence({1, 0, 0, 1}),
			                       nullptr, 3);
		Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 5), TriangleFamily::certified);
		return check_transform(trial, tri, spiky_sequence(rng, cfg), nullptr, tri.max_n());
	}
	Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 6), TriangleFamily::certified);
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	return check_transform(trial, tri, x, nullptr, tri.max_n());
}

std::optional<ojson> trial_bilinear(Rng& rng, const GeneratorConfig& cfg, long trial,
                                    bool broken) {
	if (broken) {
		if (trial == 0) {
			Sequence y = int_sequence({1, 1, 1, 1});
			return check_transform(trial, constant_triangle(3), int_sequence({1, 0, 0, 1}), &y, 3);
		}
		Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 5), TriangleFamily::certified);
		if (trial % 2) {
			Sequence x = spiky_sequence(rng, cfg);
			Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
			return check_transform(trial, tri, x, &y, tri.max_n());
		}
		Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
		Sequence y = spiky_sequence(rng, cfg);
		return check_transform(trial, tri, x, &y, tri.max_n());
	}
	Triangle tri = random_triangle(rng, cfg, rng.uniform(2, 6), TriangleFamily::certified);
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	return check_transform(trial, tri, x, &y, tri.max_n());
}

std::optional<ojson> trial_loperator(Rng& rng, const GeneratorConfig& cfg, long trial) {
	Rational lambda = rng.rational(cfg.bound, cfg.bound, true);
	Rational mu = rng.rational(cfg.bound, cfg.bound, true);
	Sequence u = random_log_concave_sequence(rng, cfg, rng.uniform(1, 4));
	Sequence shifted(u.values(), rng.uniform(-2, 1));
	long top = rng.uniform(3, 7);
	Triangle tri = loperator_triangle(LOperatorSpec(lambda, mu, shifted), top);
	return check_double_cert(trial, tri, top - 1);
}

std::optional<ojson> trial_recurrence(Rng& rng, const GeneratorConfig& cfg, long trial) {
	Rational alpha = rng.rational(cfg.bound, cfg.bound, true);
	Rational beta = rng.rational(cfg.bound, cfg.bound, true);
	long top = rng.uniform(2, 6);
	Sequence top_row = random_log_concave_sequence(rng, cfg, top + 1);
	Triangle tri = recurrence_triangle(alpha, beta, top_row, top);
	return check_double_cert(trial, tri, top - 1);
}

std::optional<ojson> trial_liggett(Rng& rng, const GeneratorConfig& cfg, long trial) {
	Rational alpha = rng.rational(cfg.bound, cfg.bound, true);
	Rational beta = rng.rational(cfg.bound, cfg.bound, true);
	Rational lambda = rng.rational(cfg.bound, cfg.bound, true);
	Rational mu = rng.rational(cfg.bound, cfg.bound, true);
	Sequence u = random_log_concave_sequence(rng, cfg, rng.uniform(1, 4));
	Sequence shifted(u.values(), rng.uniform(-2, 1));
	long n = rng.uniform(1, 8);
	LiggettInstance inst(alpha, beta, lambda, mu, shifted,
	                     random_log_concave_sequence(rng, cfg, random_len(rng, cfg)),
	                     random_log_concave_sequence(rng, cfg, random_len(rng, cfg)),
	                     random_log_concave_sequence(rng, cfg, random_len(rng, cfg)), n);
	LiggettResult result = liggett_triple(inst);
	if (result.holds)
		return std::nullopt;
	return bundle(trial, {{"instance", liggett_instance_to_json(inst)}},
	              {{"result", liggett_result_to_json(result)}});
}

std::optional<ojson> trial_convolution(Rng& rng, const GeneratorConfig& cfg, long trial,
                                       bool binomial_kind, bool broken) {
	if (broken) {
		if (trial == 0)
			return check_convolution(trial, binomial_kind, int_sequence({1, 0, 1}),
			                         int_sequence({1}));
		return check_convolution(trial, binomial_kind, spiky_sequence(rng, cfg),
		                         random_log_concave_sequence(rng, cfg, random_len(rng, cfg)));
	}
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	return check_convolution(trial, binomial_kind, x, y);
}

std::optional<ojson> trial_shifted(Rng& rng, const GeneratorConfig& cfg, long trial) {
	long a = rng.uniform(0, 8);
	long b = rng.uniform(0, a);
	long top = rng.uniform(2, 5);
	Triangle tri = shifted_binomial_triangle(a, b, top);
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	return check_transform(trial, tri, x, &y, top);
}

std::optional<ojson> trial_falling(Rng& rng, const GeneratorConfig& cfg, long trial) {
	long top = rng.uniform(2, 5);
	long a = top + rng.uniform(0, 4);
	long b = rng.uniform(0, a);
	Triangle tri = falling_binomial_triangle(a, b, top);
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	return check_transform(trial, tri, x, &y, top);
}

std::optional<ojson> trial_multinomial(Rng& rng, const GeneratorConfig& cfg, long trial) {
	long count = rng.uniform(1, 4);
	std::vector<Sequence> xs;
	long support = 0;
	for (long i = 0; i < count; ++i) {
		xs.push_back(random_log_concave_sequence(rng, cfg, rng.uniform(1, 5)));
		support += xs.back().size() - 1;
	}
	long n_max = support + 1;
	Sequence z = multinomial_transform(xs, n_max);
	CheckResult lc = is_log_concave(z, true);
	if (lc.ok)
		return std::nullopt;
	ojson inputs;
	ojson list = ojson::array();
	for (const Sequence& s : xs)
		list.push_back(sequence_to_json(s));
	inputs["xs"] = list;
	inputs["n_max"] = n_max;
	return bundle(trial, std::move(inputs),
	              {{"z", sequence_to_json(z)}, {"check", check_result_to_json(lc)}});
}

ojson order_to_json(std::optional<long> order) {
	if (order)
		return *order;
	return "inf";
}

std::optional<long> order_from_json(const ojson& j) {
	if (j.is_string() && j.get<std::string>() == "inf")
		return std::nullopt;
	return j.get<long>();
}

std::optional<ojson> check_ulc_product(long trial, const Sequence& x, std::optional<long> mx,
                                       const Sequence& y, std::optional<long> my) {
	Sequence z = ordinary_convolution(x, y);
	std::optional<long> total;
	if (mx && my)
		total = *mx + *my;
	CheckResult u = is_ulc(z, total);
	if (u.ok)
		return std::nullopt;
	ojson inputs;
	inputs["x"] = sequence_to_json(x);
	inputs["x_order"] = order_to_json(mx);
	inputs["y"] = sequence_to_json(y);
	inputs["y_order"] = order_to_json(my);
	return bundle(trial, std::move(inputs),
	              {{"z", sequence_to_json(z)}, {"check", check_result_to_json(u)}});
}

std::optional<ojson> trial_pemantle(Rng& rng, const GeneratorConfig& cfg, long trial,
                                    bool broken) {
	if (broken) {
		if (trial == 0)
			return check_ulc_product(trial, int_sequence({1, 1, 1}), 2, int_sequence({1}), 0);
		long len = rng.uniform(2, 6);
		Sequence x = random_log_concave_sequence(rng, cfg, len);  // LC but usually not ULC
		long order = rng.uniform(0, 5);
		Sequence y = random_ulc_sequence(rng, cfg, order);
		return check_ulc_product(trial, x, len - 1, y, order);
	}
	if (trial % 3 == 2) {
		// Unbounded orders: x_k = w_k / k! for log-concave w.
		auto divide_factorials = [](const Sequence& w) {
			std::vector<Rational> vals;
			Integer factorial = 1;
			for (long k = 0; k < w.size(); ++k) {
				if (k > 0)
					factorial *= k;
				vals.push_back(w.values()[k] / Rational(factorial));
			}
			return Sequence(std::move(vals), 0);
		};
		Sequence x = divide_factorials(random_log_concave_sequence(rng, cfg, rng.uniform(1, 6)));
		Sequence y = divide_factorials(random_log_concave_sequence(rng, cfg, rng.uniform(1, 6)));
		return check_ulc_product(trial, x, std::nullopt, y, std::nullopt);
	}
	long mx = rng.uniform(0, 5);
	long my = rng.uniform(0, 5);
	Sequence x = random_ulc_sequence(rng, cfg, mx);
	Sequence y = random_ulc_sequence(rng, cfg, my);
	return check_ulc_product(trial, x, mx, y, my);
}

std::optional<ojson> trial_product_double(Rng& rng, const GeneratorConfig& cfg, long trial) {
	if (trial == 0) {
		// Pinned known violation: the binomial triangle against a falling one.
		Triangle left = pascal_triangle(2);
		Triangle right = falling_binomial_triangle(2, 1, 2);
		ojson extra;
		extra["left"] = triangle_to_json(left);
		extra["right"] = triangle_to_json(right);
		return check_double_cert(trial, entrywise_product(left, right), 1, std::move(extra));
	}
	long top = rng.uniform(2, 5);
	Triangle left = random_triangle(rng, cfg, top, TriangleFamily::certified);
	Triangle right = random_triangle(rng, cfg, top, TriangleFamily::certified);
	ojson extra;
	extra["left"] = triangle_to_json(left);
	extra["right"] = triangle_to_json(right);
	return check_double_cert(trial, entrywise_product(left, right), top - 1, std::move(extra));
}

std::optional<ojson> trial_product_plc(Rng& rng, const GeneratorConfig& cfg, long trial) {
	long top = rng.uniform(2, 5);
	Rational lambda = rng.rational(cfg.bound, cfg.bound, true);
	Rational mu = rng.rational(cfg.bound, cfg.bound, true);
	Sequence u = random_log_concave_sequence(rng, cfg, rng.uniform(1, 4));
	Sequence shifted(u.values(), rng.uniform(-2, 1));
	Triangle left = loperator_triangle(LOperatorSpec(lambda, mu, shifted), top + 1);
	Rational alpha = rng.rational(cfg.bound, cfg.bound, true);
	Rational beta = rng.rational(cfg.bound, cfg.bound, true);
	Sequence top_row = random_log_concave_sequence(rng, cfg, top + 2);
	Triangle right = recurrence_triangle(alpha, beta, top_row, top + 1);
	Triangle product = entrywise_product(left, right);
	Sequence x = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	Sequence y = random_log_concave_sequence(rng, cfg, random_len(rng, cfg));
	CheckResult direct = is_log_concave(bilinear_transform(product, x, y, top + 1), true);
	CheckResult mirrored =
	    is_log_concave(bilinear_transform(reciprocal(product), x, y, top + 1), true);
	if (direct.ok && mirrored.ok)
		return std::nullopt;
	ojson inputs;
	inputs["triangle"] = triangle_to_json(product);
	inputs["x"] = sequence_to_json(x);
	inputs["y"] = sequence_to_json(y);
	inputs["n_max"] = top + 1;
	const CheckResult& bad = direct.ok ? mirrored : direct;
	return bundle(trial, std::move(inputs),
	              {{"direction", direct.ok ? "reciprocal" : "direct"},
	               {"check", check_result_to_json(bad)}});
}

std::optional<ojson> run_trial(Claim claim, long trial, const GeneratorConfig& cfg,
                               bool broken) {
	Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
	switch (claim) {
		case Claim::linear_transform_lc:
			return trial_linear(rng, cfg, trial, broken);
		case Claim::bilinear_transform_lc:
			return trial_bilinear(rng, cfg, trial, broken);
		case Claim::loperator_double_lc_positive:
			return trial_loperator(rng, cfg, trial);
		case Claim::recurrence_double_lc_positive:
			return trial_recurrence(rng, cfg, trial);
		case Claim::liggett:
			return trial_liggett(rng, cfg, trial);
		case Claim::ordinary_convolution_lc:
			return trial_convolution(rng, cfg, trial, false, broken);
		case Claim::shifted_binomial_transform_lc:
			return trial_shifted(rng, cfg, trial);
		case Claim::binomial_convolution_lc:
			return trial_convolution(rng, cfg, trial, true, broken);
		case Claim::falling_binomial_transform_lc:
			return trial_falling(rng, cfg, trial);
		case Claim::multinomial_transform_lc:
			return trial_multinomial(rng, cfg, trial);
		case Claim::pemantle_ulc:
			return trial_pemantle(rng, cfg, trial, broken);
		case Claim::product_double_lc_positive:
			return trial_product_double(rng, cfg, trial);
		case Claim::product_double_plc:
			return trial_product_plc(rng, cfg, trial);
	}
	throw std::logic_error("unhandled claim");
}

// All vectors over {0..max_val} of length 1..max_len that form log-concave
// sequences, in enumeration order.
std::vector<std::vector<Rational>> small_lc_vectors(long max_len, long max_val) {
	std::vector<std::vector<Rational>> out;
	for (long len = 1; len <= max_len; ++len) {
		std::vector<long> digits(len, 0);
		while (true) {
			std::vector<Rational> vals(digits.begin(), digits.end());
			if (is_log_concave(Sequence(vals, 0), true).ok)
				out.push_back(std::move(vals));
			long i = len - 1;
			while (i >= 0 && digits[i] == max_val)
				digits[i--] = 0;
			if (i < 0)
				break;
			++digits[i];
		}
	}
	return out;
}

void exhaustive_convolution(Claim claim, long budget, SearchReport& report) {
	bool binomial_kind = claim == Claim::binomial_convolution_lc;
	auto vectors = small_lc_vectors(3, 3);
	long trial = 0;
	for (const auto& xv : vectors) {
		for (const auto& yv : vectors) {
			if (trial >= budget)
				return;
			auto hit = check_convolution(trial, binomial_kind, Sequence(xv, 0), Sequence(yv, 0));
			++trial;
			report.trials = trial;
			if (hit) {
				report.found = true;
				report.found_trial = trial - 1;
				report.counterexample = std::move(*hit);
				return;
			}
		}
	}
}

}  // namespace

SearchReport search_counterexample(Claim claim, long budget, const GeneratorConfig& cfg,
                                   const SearchOptions& options) {
	if (budget < 1)
		throw std::invalid_argument("budget must be at least 1");
	if (cfg.min_len < 1 || cfg.max_len < cfg.min_len || cfg.bound < 1)
		throw std::invalid_argument("generator config needs 1 <= min_len <= max_len and bound >= 1");
	if (options.break_hypothesis && !supports_broken(claim))
		throw std::invalid_argument("claim '" + claim_name(claim) +
		                            "' has no broken-hypothesis mode");
	if (options.exhaustive && claim != Claim::ordinary_convolution_lc &&
	    claim != Claim::binomial_convolution_lc)
		throw std::invalid_argument("exhaustive mode covers the convolution claims only");

	SearchReport report;
	report.claim = claim;
	report.budget = budget;
	report.seed = cfg.seed;
	report.config = cfg;
	report.broke_hypothesis = options.break_hypothesis;
	report.exhaustive = options.exhaustive;

	if (options.exhaustive) {
		exhaustive_convolution(claim, budget, report);
	} else {
		long threads = std::max(1L, options.threads);
		struct Hit {
			long trial;
			ojson bundle;
		};
		std::vector<std::optional<Hit>> best(threads);
		std::exception_ptr failure;
		std::mutex failure_mutex;
		auto work = [&](long worker) {
			// Strided trials ascend, so the first hit is the worker's minimum.
			for (long trial = worker; trial < budget; trial += threads) {
				auto hit = run_trial(claim, trial, cfg, options.break_hypothesis);
				if (hit) {
					best[worker] = Hit{trial, std::move(*hit)};
					return;
				}
			}
		};
		if (threads == 1) {
			work(0);
		} else {
			std::vector<std::thread> pool;
			for (long w = 0; w < threads; ++w)
				pool.emplace_back([&, w] {
					try {
						work(w);
					} catch (...) {
						std::lock_guard<std::mutex> lock(failure_mutex);
						if (!failure)
							failure = std::current_exception();
					}
				});
			for (std::thread& t : pool)
				t.join();
			if (failure)
				std::rethrow_exception(failure);
		}
		for (auto& hit : best)
			if (hit && (!report.found || hit->trial < report.found_trial)) {
				report.found = true;
				report.found_trial = hit->trial;
				report.counterexample = std::move(hit->bundle);
			}
		report.trials = report.found ? report.found_trial + 1 : budget;
	}

	if (report.found && !reverify_search_report(search_report_to_json(report)))
		throw std::logic_error("counterexample failed its re-verification (bug)");
	return report;
}

ojson search_report_to_json(const SearchReport& report) {
	ojson out;
	out["claim"] = claim_name(report.claim);
	out["budget"] = report.budget;
	out["trials"] = report.trials;
	out["seed"] = report.seed;
	out["break_hypothesis"] = report.broke_hypothesis;
	out["exhaustive"] = report.exhaustive;
	out["config"] = {{"seed", report.config.seed},
	                 {"min_len", report.config.min_len},
	                 {"max_len", report.config.max_len},
	                 {"bound", report.config.bound},
	                 {"allow_trailing_zeros", report.config.allow_trailing_zeros}};
	out["found"] = report.found;
	if (report.found) {
		out["found_trial"] = report.found_trial;
		out["counterexample"] = report.counterexample;
	} else {
		out["found_trial"] = nullptr;
		out["counterexample"] = nullptr;
	}
	return out;
}

bool reverify_search_report(const ojson& report) {
	auto claim = claim_from_name(report.at("claim").get<std::string>());
	if (!claim)
		throw std::invalid_argument("unknown claim in report");
	if (!report.at("found").get<bool>())
		return true;
	const ojson& inputs = report.at("counterexample").at("inputs");
	switch (*claim) {
		case Claim::linear_transform_lc: {
			Sequence z = linear_transform(triangle_from_json(inputs.at("triangle")),
			                              sequence_from_json(inputs.at("x")),
			                              inputs.at("n_max").get<long>());
			return !is_log_concave(z, true).ok;
		}
		case Claim::bilinear_transform_lc:
		case Claim::shifted_binomial_transform_lc:
		case Claim::falling_binomial_transform_lc: {
			Sequence z = bilinear_transform(triangle_from_json(inputs.at("triangle")),
			                                sequence_from_json(inputs.at("x")),
			                                sequence_from_json(inputs.at("y")),
			                                inputs.at("n_max").get<long>());
			return !is_log_concave(z, true).ok;
		}
		case Claim::loperator_double_lc_positive:
		case Claim::recurrence_double_lc_positive:
		case Claim::product_double_lc_positive: {
			Triangle tri = triangle_from_json(inputs.at("triangle"));
			return !check_double_lc_positive(tri, inputs.at("n_max").get<long>()).holds();
		}
		case Claim::liggett:
			return !liggett_triple(liggett_instance_from_json(inputs.at("instance"))).holds;
		case Claim::ordinary_convolution_lc: {
			Sequence z = ordinary_convolution(sequence_from_json(inputs.at("x")),
			                                  sequence_from_json(inputs.at("y")));
			return !is_log_concave(z, true).ok;
		}
		case Claim::binomial_convolution_lc: {
			Sequence z = binomial_convolution(sequence_from_json(inputs.at("x")),
			                                  sequence_from_json(inputs.at("y")));
			return !is_log_concave(z, true).ok;
		}
		case Claim::multinomial_transform_lc: {
			std::vector<Sequence> xs;
			for (const ojson& s : inputs.at("xs"))
				xs.push_back(sequence_from_json(s));
			Sequence z = multinomial_transform(xs, inputs.at("n_max").get<long>());
			return !is_log_concave(z, true).ok;
		}
		case Claim::pemantle_ulc: {
			Sequence z = ordinary_convolution(sequence_from_json(inputs.at("x")),
			                                  sequence_from_json(inputs.at("y")));
			std::optional<long> mx = order_from_json(inputs.at("x_order"));
			std::optional<long> my = order_from_json(inputs.at("y_order"));
			std::optional<long> total;
			if (mx && my)
				total = *mx + *my;
			return !is_ulc(z, total).ok;
		}
		case Claim::product_double_plc: {
			Triangle tri = triangle_from_json(inputs.at("triangle"));
			Sequence x = sequence_from_json(inputs.at("x"));
			Sequence y = sequence_from_json(inputs.at("y"));
			long n_max = inputs.at("n_max").get<long>();
			return !is_log_concave(bilinear_transform(tri, x, y, n_max), true).ok ||
			       !is_log_concave(bilinear_transform(reciprocal(tri), x, y, n_max), true).ok;
		}
	}
	throw std::logic_error("unhandled claim");
}

DeltaReport brute_force_delta(const Triangle& tri, const Sequence& x, long n) {
	if (n < 1 || n > tri.max_n() - 1)
		throw std::out_of_range("brute_force_delta needs 1 <= n <= max_n - 1");
	DeltaReport report;
	report.n = n;
	auto cell = [&report](long i, long j) -> Rational& {
		if (i > j)
			std::swap(i, j);
		return report.coefficients[{i, j}];
	};
	for (long i = 0; i <= n; ++i)
		for (long j = 0; j <= n; ++j)
			cell(i, j) += tri.at(n, i) * tri.at(n, j);
	for (long i = 0; i <= n - 1; ++i)
		for (long j = 0; j <= n + 1; ++j)
			cell(i, j) -= tri.at(n - 1, i) * tri.at(n + 1, j);

	// Every bucket coefficient must be the closed-form a_k(n,t) cell.
	for (long t = 0; t <= 2 * n; ++t)
		for (long k = 0; 2 * k <= t; ++k) {
			auto it = report.coefficients.find({k, t - k});
			Rational have = it == report.coefficients.end() ? Rational(0) : it->second;
			if (have != a_coeff(tri, n, t, k))
				throw std::logic_error("expansion coefficient disagrees with the closed form (bug)");
		}

	Rational total = 0;
	for (const auto& [key, value] : report.coefficients) {
		Rational term = value * x.at(key.first) * x.at(key.second);
		report.weight_sums[key.first + key.second] += term;
		total += term;
	}
	Sequence z = linear_transform(tri, x, n + 1);
	report.delta = z.at(n) * z.at(n) - z.at(n - 1) * z.at(n + 1);
	if (total != report.delta)
		throw std::logic_error("bucketed sums do not add up to the direct delta (bug)");
	return report;
}

ojson delta_report_to_json(const DeltaReport& report) {
	ojson out;
	out["n"] = report.n;
	out["delta"] = format_rational(report.delta);
	ojson sums = ojson::object();
	for (const auto& [t, value] : report.weight_sums)
		sums[std::to_string(t)] = format_rational(value);
	out["weight_sums"] = sums;
	ojson cells = ojson::array();
	for (const auto& [key, value] : report.coefficients)
		cells.push_back({{"i", key.first}, {"j", key.second}, {"value", format_rational(value)}});
	out["coefficients"] = cells;
	return out;
}

}  // namespace lcpos
