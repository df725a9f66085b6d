#include "tolbal/structure.hpp"

#include <algorithm>

namespace tolbal {

std::vector<VertexSet> connected_components(const SignedGraph& g, const VertexSet* restrict) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> stack;
  auto allowed = [&](VertexId v) { return restrict == nullptr || restrict->contains(v); };

  std::vector<VertexId> roots;
  if (restrict) {
    roots = restrict->sorted();
  } else {
    roots.resize(n);
    for (std::size_t v = 0; v < n; ++v) roots[v] = static_cast<VertexId>(v);
  }

  for (VertexId r : roots) {
    if (seen[r]) continue;
    std::vector<VertexId> members{r};
    seen[r] = 1;
    stack.assign(1, r);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& a : g.neighbors(v)) {
        VertexId w = a.vertex();
        if (!seen[w] && allowed(w)) {
          seen[w] = 1;
          members.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(VertexSet::of(n, members));
  }
  return out;
}

bool is_connected(const SignedGraph& g, const VertexSet& set) {
  return is_connected(g, set.vertices(), [&](VertexId v) { return set.contains(v); });
}

VertexSet articulation_points(const SignedGraph& g, const VertexSet& restrict) {
  ArticulationScanner scanner(g.vertex_count());
  const auto members = restrict.vertices();
  const std::size_t reached = scanner.scan(g, members, [&](VertexId v) { return restrict.contains(v); });
  if (reached != members.size()) throw std::invalid_argument("articulation_points: induced subgraph is disconnected");
  VertexSet cuts(g.vertex_count());
  for (VertexId v : restrict.sorted()) {
    if (scanner.is_cut(v)) cuts.insert(v);
  }
  return cuts;
}

}  // namespace tolbal
