#include "lcpos/falsifier.hpp"
#include "lcpos/logconcave.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace lcpos;

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot read '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

// Inputs may be inline JSON, the literal "impulse", or a path to a JSON file.
ojson parse_input(const std::string& arg) {
	if (arg == "impulse")
		return ojson("impulse");
	if (!arg.empty() && (arg[0] == '[' || arg[0] == '{' || arg[0] == '"'))
		return ojson::parse(arg);
	return ojson::parse(read_file(arg));
}

std::string canon_rational(const std::string& text) {
	return format_rational(parse_rational(text));
}

std::optional<long> parse_order(const std::string& text) {
	if (text == "inf")
		return std::nullopt;
	for (char c : text)
		if (c < '0' || c > '9')
			throw std::invalid_argument("order must be a nonnegative integer or 'inf'");
	if (text.empty())
		throw std::invalid_argument("order must be a nonnegative integer or 'inf'");
	return std::stol(text);
}

// ---- triangle sources ------------------------------------------------------

struct FamilyOpts {
	std::string name;
	long max_n = -1;  // -1: derive from --nmax (or fall back to 8)
	long a = -1, b = -1;
	std::string lambda = "1", mu = "1", u = "impulse";
	std::string alpha = "1", beta = "1", top_row;
};

void add_family_options(CLI::App* cmd, FamilyOpts& fo) {
	cmd->add_option("--family", fo.name,
	                "constant | pascal | shifted-binomial | falling-binomial | loperator | "
	                "recurrence");
	cmd->add_option("--max-n", fo.max_n, "rows to construct (default: nmax + 1)")
	    ->check(CLI::NonNegativeNumber);
	cmd->add_option("--a", fo.a, "binomial family parameter a");
	cmd->add_option("--b", fo.b, "binomial family parameter b");
	cmd->add_option("--lambda", fo.lambda, "row operator weight on u_k");
	cmd->add_option("--mu", fo.mu, "row operator weight on u_{k-1}");
	cmd->add_option("--u", fo.u, "row operator seed sequence (default: impulse)");
	cmd->add_option("--alpha", fo.alpha, "recurrence weight on a(n+1,k)");
	cmd->add_option("--beta", fo.beta, "recurrence weight on a(n+1,k+1)");
	cmd->add_option("--top-row", fo.top_row, "recurrence top row (length max_n + 1)");
}

ojson family_to_json(const FamilyOpts& fo, long default_max_n) {
	ojson fam;
	fam["name"] = fo.name;
	fam["max_n"] = fo.max_n >= 0 ? fo.max_n : default_max_n;
	if (fo.name == "shifted-binomial" || fo.name == "falling-binomial") {
		if (fo.a < 0 || fo.b < 0)
			throw std::invalid_argument("--family " + fo.name + " needs --a and --b");
		fam["a"] = fo.a;
		fam["b"] = fo.b;
	} else if (fo.name == "loperator") {
		fam["lambda"] = canon_rational(fo.lambda);
		fam["mu"] = canon_rational(fo.mu);
		fam["u"] = parse_input(fo.u);
	} else if (fo.name == "recurrence") {
		if (fo.top_row.empty())
			throw std::invalid_argument("--family recurrence needs --top-row");
		fam["alpha"] = canon_rational(fo.alpha);
		fam["beta"] = canon_rational(fo.beta);
		fam["top_row"] = parse_input(fo.top_row);
	} else if (fo.name != "constant" && fo.name != "pascal") {
		throw std::invalid_argument("unknown family '" + fo.name + "'");
	}
	return fam;
}

Triangle construct_family(const ojson& fam) {
	std::string name = fam.at("name").get<std::string>();
	long max_n = fam.at("max_n").get<long>();
	if (name == "constant")
		return constant_triangle(max_n);
	if (name == "pascal")
		return pascal_triangle(max_n);
	if (name == "shifted-binomial")
		return shifted_binomial_triangle(fam.at("a").get<long>(), fam.at("b").get<long>(), max_n);
	if (name == "falling-binomial")
		return falling_binomial_triangle(fam.at("a").get<long>(), fam.at("b").get<long>(), max_n);
	if (name == "loperator")
		return loperator_triangle(LOperatorSpec(rational_from_json(fam.at("lambda")),
		                                        rational_from_json(fam.at("mu")),
		                                        sequence_from_json(fam.at("u"))),
		                          max_n);
	if (name == "recurrence")
		return recurrence_triangle(rational_from_json(fam.at("alpha")),
		                           rational_from_json(fam.at("beta")),
		                           sequence_from_json(fam.at("top_row")), max_n);
	throw std::invalid_argument("unknown family '" + name + "'");
}

Triangle triangle_from_request(const ojson& req) {
	bool have_literal = req.contains("triangle") && !req.at("triangle").is_null();
	bool have_family = req.contains("family") && !req.at("family").is_null();
	if (have_literal && have_family)
		throw std::invalid_argument("give either a literal triangle or --family, not both");
	if (have_literal)
		return triangle_from_json(req.at("triangle"));
	if (have_family)
		return construct_family(req.at("family"));
	throw std::invalid_argument("no triangle given (use a literal or --family)");
}

// ---- subcommand execution --------------------------------------------------

struct CliResult {
	ojson output;
	int exit_code = 0;
};

CliResult exec_check_seq(const ojson& req) {
	Sequence s = sequence_from_json(req.at("sequence"));
	bool allow = req.value("allow_internal_zeros", false);
	ojson out;
	out["input"] = sequence_to_json(s);
	CheckResult lc = is_log_concave(s, !allow);
	out["log_concave"] = check_result_to_json(lc);
	bool ok = lc.ok;
	if (req.value("pairs_oracle", false)) {
		CheckResult pairs = is_log_concave_pairs(s);
		out["pairs"] = check_result_to_json(pairs);
		out["oracles_agree"] = pairs.ok == is_log_concave(s, true).ok;
	}
	if (req.contains("ulc") && !req.at("ulc").is_null()) {
		std::string order_text = req.at("ulc").get<std::string>();
		CheckResult ulc = is_ulc(s, parse_order(order_text));
		out["ulc"] = {{"order", order_text}, {"result", check_result_to_json(ulc)}};
		ok = ok && ulc.ok;
	}
	return {std::move(out), ok ? 0 : 1};
}

CliResult exec_check_triangle(const ojson& req) {
	Triangle tri = triangle_from_request(req);
	long n_max = req.contains("n_max") && !req.at("n_max").is_null()
	                 ? req.at("n_max").get<long>()
	                 : tri.max_n() - 1;
	CertMethod method = CertMethod::coefficient_formula;
	std::string method_text = req.value("method", std::string("coefficient"));
	if (method_text == "polynomial")
		method = CertMethod::polynomial_expansion;
	else if (method_text != "coefficient")
		throw std::invalid_argument("--method must be 'coefficient' or 'polynomial'");

	ojson out;
	out["triangle"] = triangle_to_json(tri);
	out["n_max"] = n_max;
	bool ok = true;
	if (req.value("double", false)) {
		DoubleLcCertificate cert = check_double_lc_positive(tri, n_max, method);
		out["certificates"] = double_certificate_to_json(cert);
		ok = ok && cert.holds();
	} else {
		LcCertificate cert = check_lc_positive(tri, n_max, method);
		out["certificate"] = certificate_to_json(cert);
		ok = ok && cert.holds;
	}
	if (req.value("conditions_ab", false)) {
		ConditionsAbReport report = check_conditions_ab(tri, n_max);
		out["conditions_ab"] = conditions_ab_to_json(report);
		ok = ok && report.holds();
	}
	if (req.value("necessary", false)) {
		std::vector<Rational> samples;
		if (req.contains("p_samples"))
			for (const ojson& p : req.at("p_samples"))
				samples.push_back(rational_from_json(p));
		NecessaryConditionsReport report = necessary_conditions(tri, n_max, samples);
		out["necessary"] = necessary_conditions_to_json(report);
		ok = ok && report.holds();
	}
	if (req.value("rem_bound", false)) {
		if (!req.contains("family") || req.at("family").is_null() ||
		    req.at("family").at("name") != "loperator")
			throw std::invalid_argument("--rem-bound applies to --family loperator only");
		const ojson& fam = req.at("family");
		LOperatorSpec spec(rational_from_json(fam.at("lambda")),
		                   rational_from_json(fam.at("mu")),
		                   sequence_from_json(fam.at("u")));
		RemBoundReport report = check_rem_bound(spec, tri.max_n());
		out["rem_bound"] = rem_bound_to_json(report);
		ok = ok && report.holds();
	}
	if (req.contains("bounds") && !req.at("bounds").is_null()) {
		BasicBoundsReport report =
		    check_basic_bounds(tri, sequence_from_json(req.at("bounds").at("x")),
		                       sequence_from_json(req.at("bounds").at("y")), n_max);
		out["bounds"] = basic_bounds_to_json(report);
		ok = ok && report.holds();
	}
	return {std::move(out), ok ? 0 : 1};
}

CliResult exec_transform(const ojson& req) {
	Triangle tri = triangle_from_request(req);
	Sequence x = sequence_from_json(req.at("x"));
	long n_max = req.contains("n_max") && !req.at("n_max").is_null()
	                 ? req.at("n_max").get<long>()
	                 : tri.max_n();
	ojson out;
	out["triangle"] = triangle_to_json(tri);
	out["x"] = sequence_to_json(x);
	Sequence z;
	if (req.contains("y") && !req.at("y").is_null()) {
		Sequence y = sequence_from_json(req.at("y"));
		out["y"] = sequence_to_json(y);
		z = bilinear_transform(tri, x, y, n_max);
	} else {
		z = linear_transform(tri, x, n_max);
	}
	out["n_max"] = n_max;
	out["z"] = sequence_to_json(z);
	int exit_code = 0;
	if (req.value("assert_lc", false)) {
		CheckResult lc = is_log_concave(z, true);
		out["log_concave"] = check_result_to_json(lc);
		exit_code = lc.ok ? 0 : 1;
	}
	return {std::move(out), exit_code};
}

CliResult exec_convolve(const ojson& req) {
	std::string kind = req.at("kind").get<std::string>();
	ojson out;
	out["kind"] = kind;
	Sequence z;
	if (kind == "multinomial") {
		std::vector<Sequence> xs;
		for (const ojson& s : req.at("xs"))
			xs.push_back(sequence_from_json(s));
		long support = 0;
		for (const Sequence& s : xs)
			support += s.empty() ? 0 : s.last_index();
		long n_max = req.contains("n_max") && !req.at("n_max").is_null()
		                 ? req.at("n_max").get<long>()
		                 : support;
		ojson list = ojson::array();
		for (const Sequence& s : xs)
			list.push_back(sequence_to_json(s));
		out["xs"] = list;
		out["n_max"] = n_max;
		z = multinomial_transform(xs, n_max);
	} else if (kind == "ordinary" || kind == "binomial") {
		Sequence x = sequence_from_json(req.at("x"));
		Sequence y = sequence_from_json(req.at("y"));
		out["x"] = sequence_to_json(x);
		out["y"] = sequence_to_json(y);
		z = kind == "ordinary" ? ordinary_convolution(x, y) : binomial_convolution(x, y);
	} else {
		throw std::invalid_argument("--kind must be ordinary, binomial or multinomial");
	}
	out["z"] = sequence_to_json(z);
	int exit_code = 0;
	if (req.value("assert_lc", false)) {
		CheckResult lc = is_log_concave(z, true);
		out["log_concave"] = check_result_to_json(lc);
		if (!lc.ok)
			exit_code = 1;
	}
	if (req.contains("assert_ulc") && !req.at("assert_ulc").is_null()) {
		std::string order_text = req.at("assert_ulc").get<std::string>();
		CheckResult ulc = is_ulc(z, parse_order(order_text));
		out["ulc"] = {{"order", order_text}, {"result", check_result_to_json(ulc)}};
		if (!ulc.ok)
			exit_code = 1;
	}
	return {std::move(out), exit_code};
}

CliResult exec_liggett(const ojson& req) {
	LiggettInstance inst = liggett_instance_from_json(req.at("instance"));
	LiggettResult result = liggett_triple(inst);
	ojson out;
	out["instance"] = liggett_instance_to_json(inst);
	out["result"] = liggett_result_to_json(result);
	bool ok = result.holds;
	if (req.value("pqr", false)) {
		ojson cells = ojson::array();
		for (auto [t, r] : pqr_cells(inst.n)) {
			PqrReport report = pqr_decomposition(inst, t, r);
			ok = ok && report.holds();
			cells.push_back(pqr_report_to_json(report));
		}
		out["pqr"] = cells;
	}
	return {std::move(out), ok ? 0 : 1};
}

CliResult exec_search(const ojson& req) {
	auto claim = claim_from_name(req.at("claim").get<std::string>());
	if (!claim)
		throw std::invalid_argument("unknown claim '" + req.at("claim").get<std::string>() + "'");
	const ojson& cfg_json = req.at("config");
	GeneratorConfig cfg;
	cfg.seed = cfg_json.at("seed").get<std::uint64_t>();
	cfg.min_len = cfg_json.at("min_len").get<long>();
	cfg.max_len = cfg_json.at("max_len").get<long>();
	cfg.bound = cfg_json.at("bound").get<long>();
	cfg.allow_trailing_zeros = cfg_json.at("allow_trailing_zeros").get<bool>();
	SearchOptions options;
	options.threads = req.value("threads", 1L);
	options.break_hypothesis = req.value("break_hypothesis", false);
	options.exhaustive = req.value("exhaustive", false);
	SearchReport report = search_counterexample(*claim, req.at("budget").get<long>(), cfg, options);
	return {search_report_to_json(report), report.found ? 1 : 0};
}

CliResult exec_delta(const ojson& req) {
	Triangle tri = triangle_from_request(req);
	Sequence x = sequence_from_json(req.at("x"));
	DeltaReport report = brute_force_delta(tri, x, req.at("n").get<long>());
	ojson out;
	out["triangle"] = triangle_to_json(tri);
	out["x"] = sequence_to_json(x);
	ojson body = delta_report_to_json(report);
	for (auto& [key, value] : body.items())
		out[key] = value;
	return {std::move(out), 0};
}

CliResult exec_request(const ojson& req) {
	std::string command = req.at("command").get<std::string>();
	if (command == "check-seq")
		return exec_check_seq(req);
	if (command == "check-triangle")
		return exec_check_triangle(req);
	if (command == "transform")
		return exec_transform(req);
	if (command == "convolve")
		return exec_convolve(req);
	if (command == "liggett")
		return exec_liggett(req);
	if (command == "search")
		return exec_search(req);
	if (command == "delta")
		return exec_delta(req);
	throw std::invalid_argument("unknown command '" + command + "'");
}

void emit(const ojson& output, const std::string& format, const std::string& out_path) {
	std::string text = (format == "pretty" ? output.dump(2) : output.dump()) + "\n";
	if (out_path.empty()) {
		std::cout << text;
	} else {
		std::ofstream out(out_path);
		if (!out)
			throw std::invalid_argument("cannot write '" + out_path + "'");
		out << text;
	}
}

std::vector<std::string> split_samples(const std::string& text) {
	std::vector<std::string> out;
	std::string item;
	std::istringstream in(text);
	while (std::getline(in, item, ','))
		out.push_back(canon_rational(item));
	return out;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact certificates for log-concavity preserving triangles and transforms"};
	app.require_subcommand(1);
	app.fallthrough();  // global options may follow the subcommand

	std::string format = "json";
	std::uint64_t seed = 20260814;
	long threads = 1;
	std::string out_path, manifest_path;
	app.add_option("--format", format, "json (compact) or pretty (indented)")
	    ->check(CLI::IsMember({"json", "pretty"}));
	app.add_option("--seed", seed, "base seed for randomized subcommands");
	app.add_option("--threads", threads, "worker threads for search");
	app.add_option("--out", out_path, "write the report to this file instead of stdout");
	app.add_option("--save-manifest", manifest_path,
	               "record a manifest that `lcpos replay` reproduces byte for byte");

	// check-seq
	auto* c_seq = app.add_subcommand("check-seq", "certify log-concavity of one sequence");
	std::string seq_arg, seq_ulc;
	bool seq_pairs = false, seq_allow = false;
	c_seq->add_option("sequence", seq_arg, "sequence (inline JSON or a file)")->required();
	c_seq->add_option("--ulc", seq_ulc, "also check ultra log-concavity of this order, or 'inf'");
	c_seq->add_flag("--pairs-oracle", seq_pairs, "also run the two-index oracle and compare");
	c_seq->add_flag("--allow-internal-zeros", seq_allow, "only check the three-term inequality");

	// check-triangle
	auto* c_tri = app.add_subcommand("check-triangle", "certify (double) LC-positivity");
	std::string tri_arg, tri_method = "coefficient", tri_samples, bounds_x, bounds_y;
	long tri_nmax = -1;
	bool tri_double = false, tri_ab = false, tri_necessary = false, tri_rem = false;
	FamilyOpts tri_family;
	c_tri->add_option("triangle", tri_arg, "literal triangle (inline JSON or a file)");
	add_family_options(c_tri, tri_family);
	c_tri->add_option("--nmax", tri_nmax, "certify rows 1..nmax (default: max_n - 1)")
	    ->check(CLI::NonNegativeNumber);
	c_tri->add_flag("--double", tri_double, "also certify the reciprocal triangle");
	c_tri->add_option("--method", tri_method, "coefficient | polynomial")
	    ->check(CLI::IsMember({"coefficient", "polynomial"}));
	c_tri->add_flag("--conditions-ab", tri_ab, "run the sign-pattern and q-log-concavity screens");
	c_tri->add_flag("--necessary", tri_necessary, "run the cheap necessary-condition screens");
	c_tri->add_option("--p-samples", tri_samples, "comma-separated positive rationals");
	c_tri->add_flag("--rem-bound", tri_rem, "verify tail-coefficient bounds (loperator family)");
	c_tri->add_option("--bounds-x", bounds_x, "x for the scaled-triangle lower bounds");
	c_tri->add_option("--bounds-y", bounds_y, "y for the scaled-triangle lower bounds");

	// transform
	auto* c_tf = app.add_subcommand("transform", "apply the (bi)linear triangle transform");
	std::string tf_tri, tf_x, tf_y;
	long tf_nmax = -1;
	bool tf_assert = false;
	FamilyOpts tf_family;
	c_tf->add_option("--triangle", tf_tri, "literal triangle (inline JSON or a file)");
	add_family_options(c_tf, tf_family);
	c_tf->add_option("--x", tf_x, "input sequence")->required();
	c_tf->add_option("--y", tf_y, "second input; switches to the bilinear transform");
	c_tf->add_option("--nmax", tf_nmax, "compute z_0..z_nmax (default: max_n)")
	    ->check(CLI::NonNegativeNumber);
	c_tf->add_flag("--assert-lc", tf_assert, "exit 1 unless the output is log-concave");

	// convolve
	auto* c_cv = app.add_subcommand("convolve", "ordinary, binomial or multinomial convolution");
	std::string cv_kind, cv_x, cv_y, cv_xs, cv_ulc;
	long cv_nmax = -1;
	bool cv_assert = false;
	c_cv->add_option("--kind", cv_kind, "ordinary | binomial | multinomial")->required();
	c_cv->add_option("--x", cv_x, "left sequence");
	c_cv->add_option("--y", cv_y, "right sequence");
	c_cv->add_option("--xs", cv_xs, "JSON array of sequences (multinomial)");
	c_cv->add_option("--nmax", cv_nmax, "materialize z_0..z_nmax (multinomial)")
	    ->check(CLI::NonNegativeNumber);
	c_cv->add_flag("--assert-lc", cv_assert, "exit 1 unless the output is log-concave");
	c_cv->add_option("--assert-ulc", cv_ulc, "exit 1 unless the output is ULC of this order/'inf'");

	// liggett
	auto* c_lg = app.add_subcommand("liggett", "evaluate the generalized shuffle inequality");
	std::string lg_alpha = "1", lg_beta = "1", lg_lambda = "1", lg_mu = "1";
	std::string lg_u = "impulse", lg_v, lg_x, lg_y;
	long lg_n = 0;
	bool lg_pqr = false;
	c_lg->add_option("--alpha", lg_alpha, "recurrence weight (default 1)");
	c_lg->add_option("--beta", lg_beta, "recurrence weight (default 1)");
	c_lg->add_option("--lambda", lg_lambda, "row operator weight (default 1)");
	c_lg->add_option("--mu", lg_mu, "row operator weight (default 1)");
	c_lg->add_option("--u", lg_u, "row operator seed (default: impulse)");
	c_lg->add_option("--v", lg_v, "weight sequence v")->required();
	c_lg->add_option("--x", lg_x, "coefficient sequence x")->required();
	c_lg->add_option("--y", lg_y, "coefficient sequence y")->required();
	c_lg->add_option("--n", lg_n, "center row")->required();
	c_lg->add_flag("--pqr", lg_pqr, "also decompose every odd-weight coefficient");

	// search
	auto* c_se = app.add_subcommand("search", "hunt for a counterexample to a claim");
	std::string se_claim;
	long se_budget = 1000, se_min_len = -1, se_max_len = -1, se_bound = -1;
	bool se_break = false, se_exhaustive = false, se_no_trailing = false;
	std::string claim_list;
	for (Claim claim : all_claims())
		claim_list += (claim_list.empty() ? "" : " | ") + claim_name(claim);
	c_se->add_option("claim", se_claim, claim_list)->required();
	c_se->add_option("--budget", se_budget, "trials to evaluate (default 1000)");
	c_se->add_flag("--break-hypothesis", se_break, "drop one hypothesis per trial");
	c_se->add_flag("--exhaustive", se_exhaustive, "enumerate small integer grids instead");
	c_se->add_option("--min-len", se_min_len, "generator: minimum sequence length");
	c_se->add_option("--max-len", se_max_len, "generator: maximum sequence length");
	c_se->add_option("--bound", se_bound, "generator: numerator/denominator cap");
	c_se->add_flag("--no-trailing-zeros", se_no_trailing, "generator: forbid trailing zeros");

	// delta
	auto* c_dl = app.add_subcommand("delta", "expand z_n^2 - z_{n-1} z_{n+1} by weight");
	std::string dl_tri, dl_x;
	long dl_n = 0;
	FamilyOpts dl_family;
	c_dl->add_option("--triangle", dl_tri, "literal triangle (inline JSON or a file)");
	add_family_options(c_dl, dl_family);
	c_dl->add_option("--x", dl_x, "input sequence")->required();
	c_dl->add_option("--n", dl_n, "center row")->required();

	// replay
	auto* c_rp = app.add_subcommand("replay", "re-run a saved manifest byte for byte");
	std::string rp_manifest;
	c_rp->add_option("manifest", rp_manifest, "manifest file from --save-manifest")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	try {
		ojson req;
		if (app.got_subcommand(c_rp)) {
			req = ojson::parse(read_file(rp_manifest));
			format = req.value("format", std::string("json"));
		} else {
			req["format"] = format;
			req["seed"] = seed;
			req["threads"] = threads;
		}
		if (app.got_subcommand(c_seq)) {
			req["command"] = "check-seq";
			req["sequence"] = parse_input(seq_arg);
			if (!seq_ulc.empty())
				req["ulc"] = seq_ulc;
			req["pairs_oracle"] = seq_pairs;
			req["allow_internal_zeros"] = seq_allow;
		} else if (app.got_subcommand(c_tri)) {
			req["command"] = "check-triangle";
			long default_max_n = tri_nmax >= 0 ? tri_nmax + 1 : 8;
			if (!tri_arg.empty())
				req["triangle"] = parse_input(tri_arg);
			if (!tri_family.name.empty())
				req["family"] = family_to_json(tri_family, default_max_n);
			if (tri_nmax >= 0)
				req["n_max"] = tri_nmax;
			req["double"] = tri_double;
			req["method"] = tri_method;
			req["conditions_ab"] = tri_ab;
			req["necessary"] = tri_necessary;
			if (!tri_samples.empty())
				req["p_samples"] = split_samples(tri_samples);
			req["rem_bound"] = tri_rem;
			if (!bounds_x.empty() || !bounds_y.empty()) {
				if (bounds_x.empty() || bounds_y.empty())
					throw std::invalid_argument("--bounds-x and --bounds-y go together");
				req["bounds"] = {{"x", parse_input(bounds_x)}, {"y", parse_input(bounds_y)}};
			}
		} else if (app.got_subcommand(c_tf)) {
			req["command"] = "transform";
			if (!tf_tri.empty())
				req["triangle"] = parse_input(tf_tri);
			if (!tf_family.name.empty())
				req["family"] = family_to_json(tf_family, tf_nmax >= 0 ? tf_nmax : 8);
			req["x"] = parse_input(tf_x);
			if (!tf_y.empty())
				req["y"] = parse_input(tf_y);
			if (tf_nmax >= 0)
				req["n_max"] = tf_nmax;
			req["assert_lc"] = tf_assert;
		} else if (app.got_subcommand(c_cv)) {
			req["command"] = "convolve";
			req["kind"] = cv_kind;
			if (cv_kind == "multinomial") {
				if (cv_xs.empty())
					throw std::invalid_argument("--kind multinomial needs --xs");
				req["xs"] = parse_input(cv_xs);
				if (cv_nmax >= 0)
					req["n_max"] = cv_nmax;
			} else {
				if (cv_x.empty() || cv_y.empty())
					throw std::invalid_argument("--kind " + cv_kind + " needs --x and --y");
				req["x"] = parse_input(cv_x);
				req["y"] = parse_input(cv_y);
			}
			req["assert_lc"] = cv_assert;
			if (!cv_ulc.empty())
				req["assert_ulc"] = cv_ulc;
		} else if (app.got_subcommand(c_lg)) {
			req["command"] = "liggett";
			req["instance"] = {{"alpha", canon_rational(lg_alpha)},
			                   {"beta", canon_rational(lg_beta)},
			                   {"lambda", canon_rational(lg_lambda)},
			                   {"mu", canon_rational(lg_mu)},
			                   {"u", parse_input(lg_u)},
			                   {"v", parse_input(lg_v)},
			                   {"x", parse_input(lg_x)},
			                   {"y", parse_input(lg_y)},
			                   {"n", lg_n}};
			req["pqr"] = lg_pqr;
		} else if (app.got_subcommand(c_se)) {
			req["command"] = "search";
			req["claim"] = se_claim;
			req["budget"] = se_budget;
			req["break_hypothesis"] = se_break;
			req["exhaustive"] = se_exhaustive;
			GeneratorConfig defaults;
			req["config"] = {
			    {"seed", seed},
			    {"min_len", se_min_len >= 0 ? se_min_len : defaults.min_len},
			    {"max_len", se_max_len >= 0 ? se_max_len : defaults.max_len},
			    {"bound", se_bound >= 0 ? se_bound : defaults.bound},
			    {"allow_trailing_zeros", !se_no_trailing},
			};
		} else if (app.got_subcommand(c_dl)) {
			req["command"] = "delta";
			if (!dl_tri.empty())
				req["triangle"] = parse_input(dl_tri);
			if (!dl_family.name.empty())
				req["family"] = family_to_json(dl_family, dl_n + 1);
			req["x"] = parse_input(dl_x);
			req["n"] = dl_n;
		}

		if (!manifest_path.empty()) {
			std::ofstream out(manifest_path);
			if (!out)
				throw std::invalid_argument("cannot write '" + manifest_path + "'");
			out << req.dump(2) << "\n";
		}
		CliResult result = exec_request(req);
		emit(result.output, format, out_path);
		return result.exit_code;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
