#include "lcpos/json_io.hpp"

#include <stdexcept>

namespace lcpos {

namespace {

ojson rational_array(const std::vector<Rational>& values) {
	ojson arr = ojson::array();
	for (const Rational& v : values)
		arr.push_back(format_rational(v));
	return arr;
}

std::vector<Rational> rational_vector(const ojson& j, const char* what) {
	if (!j.is_array())
		throw std::invalid_argument(std::string(what) + " must be a JSON array");
	std::vector<Rational> out;
	out.reserve(j.size());
	for (const ojson& item : j)
		out.push_back(rational_from_json(item));
	return out;
}

ojson witness_or_null(const CheckResult& r) {
	if (r.ok)
		return nullptr;
	ojson w;
	w["index"] = r.witness_index;
	w["value"] = format_rational(r.witness_value);
	w["reason"] = r.reason;
	return w;
}

}  // namespace

ojson rational_to_json(const Rational& value) {
	return format_rational(value);
}

Rational rational_from_json(const ojson& j) {
	if (j.is_string())
		return parse_rational(j.get<std::string>());
	if (j.is_number_integer())
		return Rational(j.get<long long>());
	if (j.is_number_unsigned())
		return Rational(j.get<unsigned long long>());
	throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " +
	                            j.dump());
}

ojson sequence_to_json(const Sequence& s) {
	if (s.offset() == 0)
		return rational_array(s.values());
	ojson out;
	out["offset"] = s.offset();
	out["values"] = rational_array(s.values());
	return out;
}

Sequence sequence_from_json(const ojson& j) {
	if (j.is_string() && j.get<std::string>() == "impulse")
		return Sequence::impulse();
	if (j.is_array())
		return Sequence(rational_vector(j, "sequence"), 0);
	if (j.is_object() && j.contains("values")) {
		long offset = j.value("offset", 0L);
		return Sequence(rational_vector(j.at("values"), "sequence values"), offset);
	}
	throw std::invalid_argument("expected a sequence as array, {\"offset\",\"values\"} or "
	                            "\"impulse\", got " + j.dump());
}

ojson qpoly_to_json(const QPoly& f) {
	return rational_array(f.coeffs());
}

ojson check_result_to_json(const CheckResult& r) {
	ojson out;
	out["ok"] = r.ok;
	out["witness"] = witness_or_null(r);
	return out;
}

ojson triangle_to_json(const Triangle& t) {
	ojson out;
	out["max_n"] = t.max_n();
	ojson rows = ojson::array();
	for (long n = 0; n <= t.max_n(); ++n)
		rows.push_back(rational_array(t.row(n)));
	out["rows"] = rows;
	ojson params = ojson::object();
	for (const auto& [key, value] : t.provenance().params)
		params[key] = value;
	out["provenance"] = {{"kind", t.provenance().kind}, {"params", params}};
	return out;
}

Triangle triangle_from_json(const ojson& j) {
	// Either a bare array of rows or an object with "rows" (plus optional
	// max_n and provenance, as produced by triangle_to_json).
	if (j.is_array()) {
		std::vector<std::vector<Rational>> rows;
		for (const ojson& row : j)
			rows.push_back(rational_vector(row, "triangle row"));
		return Triangle(std::move(rows));
	}
	if (!j.is_object() || !j.contains("rows"))
		throw std::invalid_argument("triangle JSON must be an object with a \"rows\" array");
	std::vector<std::vector<Rational>> rows;
	for (const ojson& row : j.at("rows"))
		rows.push_back(rational_vector(row, "triangle row"));
	if (j.contains("max_n") && j.at("max_n").get<long>() != static_cast<long>(rows.size()) - 1)
		throw std::invalid_argument("triangle max_n disagrees with the number of rows");
	Provenance prov;
	if (j.contains("provenance")) {
		const ojson& p = j.at("provenance");
		prov.kind = p.value("kind", std::string("literal"));
		if (p.contains("params"))
			for (const auto& [key, value] : p.at("params").items())
				prov.params[key] = value.get<std::string>();
	}
	return Triangle(std::move(rows), std::move(prov));
}

ojson certificate_to_json(const LcCertificate& cert) {
	ojson out;
	out["verdict"] = cert.holds ? "holds" : "violated";
	out["range"] = {{"n_max", cert.n_max}};
	if (cert.witness) {
		out["witness"] = {{"r", cert.witness->r},
		                  {"n", cert.witness->n},
		                  {"t", cert.witness->t},
		                  {"value", format_rational(cert.witness->value)}};
	} else {
		out["witness"] = nullptr;
	}
	out["method"] = cert_method_name(cert.method);
	return out;
}

ojson double_certificate_to_json(const DoubleLcCertificate& cert) {
	ojson out;
	out["verdict"] = cert.holds() ? "holds" : "violated";
	out["direct"] = certificate_to_json(cert.direct);
	out["reciprocal"] = certificate_to_json(cert.reciprocal);
	return out;
}

ojson conditions_ab_to_json(const ConditionsAbReport& report) {
	ojson out;
	out["verdict"] = report.holds() ? "holds" : "violated";
	out["condition_a"] = check_result_to_json(report.condition_a);
	out["condition_b"] = check_result_to_json(report.condition_b);
	out["lc_positivity_confirmed"] = report.lc_positivity_confirmed;
	return out;
}

ojson necessary_conditions_to_json(const NecessaryConditionsReport& report) {
	ojson out;
	out["verdict"] = report.holds() ? "holds" : "violated";
	out["columns"] = check_result_to_json(report.columns);
	out["row_sums"] = check_result_to_json(report.row_sums);
	out["evaluations"] = check_result_to_json(report.evaluations);
	out["diagonal"] = check_result_to_json(report.diagonal);
	ojson samples = ojson::array();
	for (const Rational& p : report.samples)
		samples.push_back(format_rational(p));
	out["samples"] = samples;
	return out;
}

namespace {

ojson violations_to_json(const std::vector<BoundViolation>& violations) {
	ojson arr = ojson::array();
	for (const BoundViolation& v : violations)
		arr.push_back({{"bound", v.bound},
		               {"n", v.n},
		               {"t", v.t},
		               {"r", v.r},
		               {"lhs", format_rational(v.lhs)},
		               {"rhs", format_rational(v.rhs)}});
	return arr;
}

}  // namespace

ojson basic_bounds_to_json(const BasicBoundsReport& report) {
	ojson out;
	out["verdict"] = report.holds() ? "holds" : "violated";
	out["cells_checked"] = report.cells_checked;
	out["violations"] = violations_to_json(report.violations);
	return out;
}

ojson rem_bound_to_json(const RemBoundReport& report) {
	ojson out;
	out["verdict"] = report.holds() ? "holds" : "violated";
	out["equality_cells"] = report.equality_cells;
	out["inequality_cells"] = report.inequality_cells;
	out["violations"] = violations_to_json(report.violations);
	return out;
}

ojson liggett_instance_to_json(const LiggettInstance& inst) {
	ojson out;
	out["alpha"] = format_rational(inst.alpha);
	out["beta"] = format_rational(inst.beta);
	out["lambda"] = format_rational(inst.lambda);
	out["mu"] = format_rational(inst.mu);
	out["u"] = sequence_to_json(inst.u);
	out["v"] = sequence_to_json(inst.v);
	out["x"] = sequence_to_json(inst.x);
	out["y"] = sequence_to_json(inst.y);
	out["n"] = inst.n;
	return out;
}

LiggettInstance liggett_instance_from_json(const ojson& j) {
	return LiggettInstance(rational_from_json(j.at("alpha")), rational_from_json(j.at("beta")),
	                       rational_from_json(j.at("lambda")), rational_from_json(j.at("mu")),
	                       sequence_from_json(j.at("u")), sequence_from_json(j.at("v")),
	                       sequence_from_json(j.at("x")), sequence_from_json(j.at("y")),
	                       j.at("n").get<long>());
}

ojson liggett_result_to_json(const LiggettResult& result) {
	ojson out;
	out["z_prev"] = format_rational(result.z_prev);
	out["z_mid"] = format_rational(result.z_mid);
	out["z_next"] = format_rational(result.z_next);
	out["holds"] = result.holds;
	return out;
}

ojson pqr_report_to_json(const PqrReport& report) {
	ojson out;
	out["t"] = report.t;
	out["r"] = report.r;
	out["sums"] = {{"p", format_rational(report.p_sum)},
	               {"q", format_rational(report.q_sum)},
	               {"r", format_rational(report.r_sum)}};
	out["expected"] = {{"p", format_rational(report.p_expected)},
	                   {"q", format_rational(report.q_expected)},
	                   {"r", format_rational(report.r_expected)}};
	out["e_value"] = format_rational(report.e_value);
	out["row_bounds"] = {{"p", format_rational(report.p_bound_e)},
	                     {"q", format_rational(report.q_bound_e)},
	                     {"r", format_rational(report.r_bound_e)}};
	out["coefficient_bounds"] = {{"p", format_rational(report.p_bound_a)},
	                             {"q", format_rational(report.q_bound_a)},
	                             {"r", format_rational(report.r_bound_a)}};
	out["identities_hold"] = report.identities_hold;
	out["e_bounds_hold"] = report.e_bounds_hold;
	out["a_bounds_hold"] = report.a_bounds_hold;
	out["amgm_holds"] = report.amgm_holds;
	out["holds"] = report.holds();
	return out;
}

}  // namespace lcpos
