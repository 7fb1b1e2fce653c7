#pragma once

#include <string>

#include <json.hpp>

#include "glhom/algebra.hpp"
#include "glhom/jacobi.hpp"
#include "glhom/report.hpp"

namespace glhom {

// Algebra format: {"dim": int, "unit": ["p/q", ...],
//   "table": dim x dim array of {"k": "p/q"} maps, "label": str}
nlohmann::json algebra_to_json(const FinDimAlgebra& a);
FinDimAlgebra algebra_from_json(const nlohmann::json& j);

// Operator format: {"ring": <label string or inline algebra>, "terms":
//   [{"offset": int, "left_tail": [..], "window_start": int,
//     "window": [[..], ...], "right_tail": [..]}, ...]}
// Coefficients are coordinate arrays of rational strings. A label-only
// "ring" must name a builtin: "Q", "Q[eps]/(eps^2)", "Q[Z/m]", "Q[x]/(x^n)".
nlohmann::json operator_to_json(const JacobiOperator& op);
JacobiOperator operator_from_json(const nlohmann::json& j,
                                  const FinDimAlgebra& ring);
FinDimAlgebra ring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const HomologyReport& r);
HomologyReport report_from_json(const nlohmann::json& j);

}  // namespace glhom
