#pragma once

#include "lcpos/check_result.hpp"
#include "lcpos/lcpositivity.hpp"
#include "lcpos/qpoly.hpp"
#include "lcpos/sequence.hpp"
#include "lcpos/transforms.hpp"
#include "lcpos/triangle.hpp"

#include <json.hpp>

namespace lcpos {

// Insertion-ordered JSON everywhere so emitted documents are byte-stable:
// re-running a command reproduces its output exactly.
using ojson = nlohmann::ordered_json;

// Rationals are emitted as strings "p" / "p/q" (always exact) and accepted
// back as strings or plain JSON integers. Floats are rejected: there is no
// exact value to recover.
ojson rational_to_json(const Rational& value);
Rational rational_from_json(const ojson& j);

// Sequences starting at offset 0 are plain arrays; anything else is
// {"offset": o, "values": [...]}. The string "impulse" is accepted as input.
ojson sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const ojson& j);

// Coefficients by ascending power.
ojson qpoly_to_json(const QPoly& f);

ojson check_result_to_json(const CheckResult& r);

// {"max_n": N, "rows": [["1"], ...], "provenance": {"kind": ..., "params": {...}}}.
// On input "rows" is required; "max_n" and "provenance" are optional (max_n
// is validated against the rows when present).
ojson triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const ojson& j);

ojson certificate_to_json(const LcCertificate& cert);
ojson double_certificate_to_json(const DoubleLcCertificate& cert);
ojson conditions_ab_to_json(const ConditionsAbReport& report);
ojson necessary_conditions_to_json(const NecessaryConditionsReport& report);
ojson basic_bounds_to_json(const BasicBoundsReport& report);
ojson rem_bound_to_json(const RemBoundReport& report);

ojson liggett_instance_to_json(const LiggettInstance& inst);
LiggettInstance liggett_instance_from_json(const ojson& j);
ojson liggett_result_to_json(const LiggettResult& result);
ojson pqr_report_to_json(const PqrReport& report);

}  // namespace lcpos
