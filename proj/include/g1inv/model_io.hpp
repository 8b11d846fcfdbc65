#pragma once

#include "g1inv/models.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace g1inv {

/// Model files: {"degree": n, "coefficients": ...} with rationals written as
/// strings "int" or "num/den" (plain JSON integers are accepted on input).
///   1: [a1, a2, a3, a4, a6]
///   2: {"p": [α0, α1, α2], "q": [a, b, c, d, e]}
///   3: [a, b, c, a2, a3, b1, b3, c1, c2, m]
///   4: {"q1": [10 graded-lex coefficients], "q2": [...]}
///   5: {"matrix": [10 upper-triangle entries, each 5 coefficients of x1..x5]}
GenusOneModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const GenusOneModel& m);

GenusOneModel parse_model(std::string_view text);
std::string dump_model(const GenusOneModel& m);

/// Transformations use the same envelope:
///   1: [u, r, s, t]
///   2: {"mu": μ, "r": [r0, r1, r2], "B": 2x2}
///   3: {"mu": μ, "B": 3x3}
///   4: {"A": 2x2, "B": 4x4}
///   5: {"A": 5x5, "B": 5x5}
/// Matrices are arrays of rows.
Transformation transformation_from_json(const nlohmann::json& doc);
nlohmann::json transformation_to_json(const Transformation& g);

Transformation parse_transformation(std::string_view text);

} // namespace g1inv
