// Python bindings. Values cross the boundary as plain Python data (dicts,
// lists, strings); exact rationals stay strings so nothing is ever rounded.
#include "lcpos/falsifier.hpp"
#include "lcpos/logconcave.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace lcpos;

namespace {

py::object json_to_py(const ojson& j) {
	switch (j.type()) {
	case ojson::value_t::null:
		return py::none();
	case ojson::value_t::boolean:
		return py::bool_(j.get<bool>());
	case ojson::value_t::number_integer:
		return py::int_(j.get<long long>());
	case ojson::value_t::number_unsigned:
		return py::int_(j.get<unsigned long long>());
	case ojson::value_t::number_float:
		return py::float_(j.get<double>());
	case ojson::value_t::string:
		return py::str(j.get<std::string>());
	case ojson::value_t::array: {
		py::list out;
		for (const ojson& item : j)
			out.append(json_to_py(item));
		return out;
	}
	case ojson::value_t::object: {
		py::dict out;
		for (const auto& [key, value] : j.items())
			out[py::str(key)] = json_to_py(value);
		return out;
	}
	default:
		throw std::invalid_argument("unsupported JSON payload");
	}
}

ojson py_to_json(py::handle obj) {
	if (obj.is_none())
		return nullptr;
	if (py::isinstance<py::bool_>(obj))
		return obj.cast<bool>();
	if (py::isinstance<py::int_>(obj))
		return obj.cast<long long>();
	if (py::isinstance<py::str>(obj))
		return obj.cast<std::string>();
	if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
		ojson out = ojson::array();
		for (py::handle item : obj)
			out.push_back(py_to_json(item));
		return out;
	}
	if (py::isinstance<py::dict>(obj)) {
		ojson out = ojson::object();
		for (auto item : obj.cast<py::dict>())
			out[item.first.cast<std::string>()] = py_to_json(item.second);
		return out;
	}
	throw std::invalid_argument("expected int, str, bool, None, list or dict");
}

Sequence seq_arg(py::handle obj) { return sequence_from_json(py_to_json(obj)); }

Rational rat_arg(py::handle obj) { return rational_from_json(py_to_json(obj)); }

std::optional<long> order_arg(py::handle obj) {
	if (obj.is_none())
		return std::nullopt;
	if (py::isinstance<py::str>(obj)) {
		if (obj.cast<std::string>() == "inf")
			return std::nullopt;
		throw std::invalid_argument("order must be an int, None or 'inf'");
	}
	return obj.cast<long>();
}

CertMethod method_arg(const std::string& name) {
	if (name == "coefficient")
		return CertMethod::coefficient_formula;
	if (name == "polynomial")
		return CertMethod::polynomial_expansion;
	throw std::invalid_argument("method must be 'coefficient' or 'polynomial'");
}

py::int_ big_int(const Integer& value) {
	std::string digits = value.str();
	PyObject* raw = PyLong_FromString(digits.c_str(), nullptr, 10);
	if (!raw)
		throw py::error_already_set();
	return py::reinterpret_steal<py::int_>(raw);
}

}  // namespace

PYBIND11_MODULE(_lcpos, m) {
	m.doc() = "exact log-concavity certificates for triangle transforms";
	m.attr("__version__") = "1.0.0";

	py::class_<Triangle>(m, "Triangle")
	    .def(py::init([](py::handle rows) { return triangle_from_json(py_to_json(rows)); }),
	         py::arg("rows"), "build from a list of rows (row n has n + 1 entries)")
	    .def_property_readonly("max_n", &Triangle::max_n)
	    .def("at",
	         [](const Triangle& t, long n, long k) { return format_rational(t.at(n, k)); })
	    .def("row",
	         [](const Triangle& t, long n) { return json_to_py(sequence_to_json(t.row_sequence(n))); })
	    .def("to_dict", [](const Triangle& t) { return json_to_py(triangle_to_json(t)); })
	    .def("__eq__", [](const Triangle& a, const Triangle& b) { return a == b; })
	    .def("__repr__", [](const Triangle& t) {
		    return "<Triangle max_n=" + std::to_string(t.max_n()) + ">";
	    });

	m.def("constant_triangle", &constant_triangle, py::arg("max_n"));
	m.def("pascal_triangle", &pascal_triangle, py::arg("max_n"));
	m.def("shifted_binomial_triangle", &shifted_binomial_triangle, py::arg("a"), py::arg("b"),
	      py::arg("max_n"));
	m.def("falling_binomial_triangle", &falling_binomial_triangle, py::arg("a"), py::arg("b"),
	      py::arg("max_n"));
	m.def(
	    "loperator_triangle",
	    [](py::handle lam, py::handle mu, py::handle u, long max_n) {
		    return loperator_triangle(LOperatorSpec(rat_arg(lam), rat_arg(mu), seq_arg(u)), max_n);
	    },
	    py::arg("lam"), py::arg("mu"), py::arg("u"), py::arg("max_n"));
	m.def(
	    "recurrence_triangle",
	    [](py::handle alpha, py::handle beta, py::handle top_row, long max_n) {
		    return recurrence_triangle(rat_arg(alpha), rat_arg(beta), seq_arg(top_row), max_n);
	    },
	    py::arg("alpha"), py::arg("beta"), py::arg("top_row"), py::arg("max_n"));
	m.def("reciprocal_triangle", &reciprocal, py::arg("triangle"));
	m.def(
	    "scale_triangle",
	    [](const Triangle& t, py::handle x, py::handle y) {
		    std::optional<Sequence> sx, sy;
		    if (!x.is_none())
			    sx = seq_arg(x);
		    if (!y.is_none())
			    sy = seq_arg(y);
		    return scale_triangle(t, sx, sy);
	    },
	    py::arg("triangle"), py::arg("x") = py::none(), py::arg("y") = py::none());
	m.def("entrywise_product", &entrywise_product, py::arg("left"), py::arg("right"));

	m.def(
	    "is_log_concave",
	    [](py::handle seq, bool require_no_internal_zeros) {
		    return json_to_py(
		        check_result_to_json(is_log_concave(seq_arg(seq), require_no_internal_zeros)));
	    },
	    py::arg("sequence"), py::arg("require_no_internal_zeros") = true);
	m.def(
	    "is_log_concave_pairs",
	    [](py::handle seq) {
		    return json_to_py(check_result_to_json(is_log_concave_pairs(seq_arg(seq))));
	    },
	    py::arg("sequence"));
	m.def(
	    "is_ulc",
	    [](py::handle seq, py::handle order) {
		    return json_to_py(check_result_to_json(is_ulc(seq_arg(seq), order_arg(order))));
	    },
	    py::arg("sequence"), py::arg("order") = py::none(),
	    "order None or 'inf' checks the factorial-weighted variant");

	m.def(
	    "a_rnt",
	    [](const Triangle& t, long n, long tt, long r) {
		    return format_rational(a_rnt(t, n, tt, r));
	    },
	    py::arg("triangle"), py::arg("n"), py::arg("t"), py::arg("r"));
	m.def(
	    "a_coeff",
	    [](const Triangle& t, long n, long tt, long k) {
		    return format_rational(a_coeff(t, n, tt, k));
	    },
	    py::arg("triangle"), py::arg("n"), py::arg("t"), py::arg("k"));
	m.def(
	    "check_lc_positive",
	    [](const Triangle& t, long n_max, const std::string& method) {
		    return json_to_py(certificate_to_json(check_lc_positive(t, n_max, method_arg(method))));
	    },
	    py::arg("triangle"), py::arg("n_max"), py::arg("method") = "coefficient");
	m.def(
	    "check_double_lc_positive",
	    [](const Triangle& t, long n_max, const std::string& method) {
		    return json_to_py(
		        double_certificate_to_json(check_double_lc_positive(t, n_max, method_arg(method))));
	    },
	    py::arg("triangle"), py::arg("n_max"), py::arg("method") = "coefficient");
	m.def(
	    "check_conditions_ab",
	    [](const Triangle& t, long n_max) {
		    return json_to_py(conditions_ab_to_json(check_conditions_ab(t, n_max)));
	    },
	    py::arg("triangle"), py::arg("n_max"));
	m.def(
	    "necessary_conditions",
	    [](const Triangle& t, long n_max, py::handle samples) {
		    std::vector<Rational> ps;
		    if (!samples.is_none())
			    for (py::handle p : samples)
				    ps.push_back(rat_arg(p));
		    return json_to_py(necessary_conditions_to_json(necessary_conditions(t, n_max, ps)));
	    },
	    py::arg("triangle"), py::arg("n_max"), py::arg("p_samples") = py::none());
	m.def(
	    "check_basic_bounds",
	    [](const Triangle& t, py::handle x, py::handle y, long n_max) {
		    return json_to_py(
		        basic_bounds_to_json(check_basic_bounds(t, seq_arg(x), seq_arg(y), n_max)));
	    },
	    py::arg("triangle"), py::arg("x"), py::arg("y"), py::arg("n_max"));
	m.def(
	    "check_rem_bound",
	    [](py::handle lam, py::handle mu, py::handle u, long top_n) {
		    LOperatorSpec spec(rat_arg(lam), rat_arg(mu), seq_arg(u));
		    return json_to_py(rem_bound_to_json(check_rem_bound(spec, top_n)));
	    },
	    py::arg("lam"), py::arg("mu"), py::arg("u"), py::arg("top_n"));

	m.def(
	    "linear_transform",
	    [](const Triangle& t, py::handle x, long n_max) {
		    return json_to_py(sequence_to_json(linear_transform(t, seq_arg(x), n_max)));
	    },
	    py::arg("triangle"), py::arg("x"), py::arg("n_max"));
	m.def(
	    "bilinear_transform",
	    [](const Triangle& t, py::handle x, py::handle y, long n_max) {
		    return json_to_py(
		        sequence_to_json(bilinear_transform(t, seq_arg(x), seq_arg(y), n_max)));
	    },
	    py::arg("triangle"), py::arg("x"), py::arg("y"), py::arg("n_max"));
	m.def(
	    "ordinary_convolution",
	    [](py::handle x, py::handle y) {
		    return json_to_py(sequence_to_json(ordinary_convolution(seq_arg(x), seq_arg(y))));
	    },
	    py::arg("x"), py::arg("y"));
	m.def(
	    "binomial_convolution",
	    [](py::handle x, py::handle y) {
		    return json_to_py(sequence_to_json(binomial_convolution(seq_arg(x), seq_arg(y))));
	    },
	    py::arg("x"), py::arg("y"));
	m.def(
	    "multinomial_transform",
	    [](py::handle xs, long n_max) {
		    std::vector<Sequence> inputs;
		    for (py::handle x : xs)
			    inputs.push_back(seq_arg(x));
		    return json_to_py(sequence_to_json(multinomial_transform(inputs, n_max)));
	    },
	    py::arg("xs"), py::arg("n_max"));

	m.def(
	    "liggett_triple",
	    [](py::handle instance) {
		    LiggettInstance inst = liggett_instance_from_json(py_to_json(instance));
		    return json_to_py(liggett_result_to_json(liggett_triple(inst)));
	    },
	    py::arg("instance"),
	    "instance keys: alpha, beta, lambda, mu, u, v, x, y, n");
	m.def(
	    "pqr_decomposition",
	    [](py::handle instance, long t, long r) {
		    LiggettInstance inst = liggett_instance_from_json(py_to_json(instance));
		    return json_to_py(pqr_report_to_json(pqr_decomposition(inst, t, r)));
	    },
	    py::arg("instance"), py::arg("t"), py::arg("r"));
	m.def("pqr_cells", &pqr_cells, py::arg("n"));
	m.def(
	    "brute_force_delta",
	    [](const Triangle& t, py::handle x, long n) {
		    return json_to_py(delta_report_to_json(brute_force_delta(t, seq_arg(x), n)));
	    },
	    py::arg("triangle"), py::arg("x"), py::arg("n"));

	m.def("claims", [] {
		py::list out;
		for (Claim claim : all_claims())
			out.append(py::str(claim_name(claim)));
		return out;
	});
	m.def(
	    "search_counterexample",
	    [](const std::string& claim, long budget, std::uint64_t seed, long min_len, long max_len,
	       long bound, bool allow_trailing_zeros, long threads, bool break_hypothesis,
	       bool exhaustive) {
		    auto parsed = claim_from_name(claim);
		    if (!parsed)
			    throw std::invalid_argument("unknown claim '" + claim + "'");
		    GeneratorConfig cfg;
		    cfg.seed = seed;
		    cfg.min_len = min_len;
		    cfg.max_len = max_len;
		    cfg.bound = bound;
		    cfg.allow_trailing_zeros = allow_trailing_zeros;
		    SearchOptions options;
		    options.threads = threads;
		    options.break_hypothesis = break_hypothesis;
		    options.exhaustive = exhaustive;
		    SearchReport report;
		    {
			    py::gil_scoped_release release;
			    report = search_counterexample(*parsed, budget, cfg, options);
		    }
		    return json_to_py(search_report_to_json(report));
	    },
	    py::arg("claim"), py::arg("budget"), py::arg("seed") = 20260814,
	    py::arg("min_len") = 1, py::arg("max_len") = 8, py::arg("bound") = 4,
	    py::arg("allow_trailing_zeros") = true, py::arg("threads") = 1,
	    py::arg("break_hypothesis") = false, py::arg("exhaustive") = false);

	m.def(
	    "binomial", [](long n, long k) { return big_int(binomial(n, k)); }, py::arg("n"),
	    py::arg("k"));
	m.def(
	    "parse_rational", [](const std::string& s) { return format_rational(parse_rational(s)); },
	    py::arg("text"), "normalize a rational literal like '-4/6' to '-2/3'");
}
