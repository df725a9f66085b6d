#pragma once

#include <json.hpp>
#include <string>

#include "tolbal/rational.hpp"
#include "tolbal/signed_graph.hpp"
#include "tolbal/solution.hpp"

namespace tolbal {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSolutionSchema = "tolbal.solution/1";

/// Label as a JSON number when the graph uses integer labels, else a string.
ordered_json label_json(const SignedGraph& g, VertexId v);

/// Self-describing solution record. `meta` (solver, params, dataset, ...) is
/// copied in front of the solution fields.
ordered_json solution_json(const SignedGraph& g, const Solution& sol, const Tolerance& tol, const ordered_json& meta);

/// Reads the vertices and coloring of a solution record back; labels are
/// resolved against `g`. Throws std::invalid_argument on unknown labels.
Solution solution_from_json(const SignedGraph& g, const ordered_json& record, const Tolerance& tol);

/// Exact rational as "a/b" (or "a" when integral).
std::string rational_text(const Rational& r);

}  // namespace tolbal
