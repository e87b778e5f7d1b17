#pragma once

#include <chroma/list_colouring.hpp>
#include <chroma/polynomial.hpp>

#include <json.hpp>

namespace chroma {

/// {"var": "x" | "y", "coeffs": ["c0", "c1", ...]}
auto polynomial_to_json(const IntPolynomial & p, char var) -> nlohmann::ordered_json;
auto polynomial_from_json(const nlohmann::json & j) -> IntPolynomial;

/// {"m": int, "lists": [[colours]...], "bipartition": [[V+], [V-]] | null}
auto list_assignment_to_json(const ListAssignment & l) -> nlohmann::ordered_json;
auto list_assignment_from_json(const nlohmann::json & j) -> ListAssignment;

/// {"y_plus_1_label": int | null, "forbidden": [[labels]...]}
auto forbidden_to_json(const ForbiddenAssignment & f) -> nlohmann::ordered_json;
auto forbidden_from_json(const nlohmann::json & j) -> ForbiddenAssignment;

} // namespace chroma
