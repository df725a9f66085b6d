#include "tolbal/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace tolbal {

std::string rational_text(const Rational& r) {
  return r.den() == 1 ? std::to_string(r.num()) : r.to_string();
}

ordered_json label_json(const SignedGraph& g, VertexId v) {
  if (g.numeric_labels()) return std::stoll(g.label(v));
  return g.label(v);
}

ordered_json solution_json(const SignedGraph& g, const Solution& sol, const Tolerance& tol, const ordered_json& meta) {
  ordered_json j;
  j["schema"] = kSolutionSchema;
  for (const auto& [key, value] : meta.items()) j[key] = value;

  const Score s = rescore(g, sol, tol);
  const Rational phi = s.value(tol);
  j["beta"] = tol.to_string();
  j["num_vertices"] = sol.size();
  j["num_edges"] = s.m_sel;
  j["imbalanced"] = s.imb;
  j["scaled_score"] = s.scaled;
  j["phi_hat"] = rational_text(phi);
  j["phi_hat_float"] = phi.to_double();
  j["feasible"] = s.scaled >= 0;
  if (sol.empty()) {
    j["polarity"] = "0";
    j["polarity_float"] = 0.0;
  } else {
    const Rational pol(2 * (s.m_sel - 2 * s.imb), static_cast<std::int64_t>(sol.size()));
    j["polarity"] = rational_text(pol);
    j["polarity_float"] = pol.to_double();
  }

  // V1 is the side holding the smallest vertex.
  auto vertices = ordered_json::array();
  auto v1 = ordered_json::array(), v2 = ordered_json::array();
  const std::uint8_t first = sol.empty() ? 0 : sol.colors.front();
  for (std::size_t i = 0; i < sol.size(); ++i) {
    const auto label = label_json(g, sol.vertices[i]);
    vertices.push_back(label);
    (sol.colors[i] == first ? v1 : v2).push_back(label);
  }
  j["vertices"] = std::move(vertices);
  j["coloring"] = {{"V1", std::move(v1)}, {"V2", std::move(v2)}};
  return j;
}

namespace {

VertexId resolve(const SignedGraph& g, const ordered_json& label) {
  const std::string text = label.is_string() ? label.get<std::string>() : label.dump();
  auto v = g.find_label(text);
  if (!v) throw std::invalid_argument("unknown vertex label in solution: " + text);
  return *v;
}

}  // namespace

Solution solution_from_json(const SignedGraph& g, const ordered_json& record, const Tolerance& tol) {
  if (!record.contains("coloring")) throw std::invalid_argument("solution record has no coloring");
  const auto& c = record.at("coloring");
  Coloring col(g.vertex_count());
  VertexSet set(g.vertex_count());
  for (int side = 0; side < 2; ++side) {
    for (const auto& label : c.at(side == 0 ? "V1" : "V2")) {
      const VertexId v = resolve(g, label);
      if (!set.insert(v)) throw std::invalid_argument("vertex listed twice in coloring");
      col.set(v, side);
    }
  }
  if (record.contains("vertices")) {
    std::vector<VertexId> listed;
    for (const auto& label : record.at("vertices")) listed.push_back(resolve(g, label));
    std::sort(listed.begin(), listed.end());
    if (listed != set.sorted()) throw std::invalid_argument("vertices and coloring disagree");
  }
  return Solution::restrict(g, col, set, tol);
}

}  // namespace tolbal
