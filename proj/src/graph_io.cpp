#include "tolbal/graph_io.hpp"

#include "tolbal/detail/labels.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tolbal {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == ',' || line[j] == '\r')) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

using detail::parse_int_label;

std::optional<Sign> parse_sign(std::string_view s) {
  if (s == "+" || s == "1" || s == "+1" || s == "1.0") return Sign::Positive;
  if (s == "-" || s == "-1" || s == "-1.0") return Sign::Negative;
  return std::nullopt;
}

// "# Nodes: 5881 Edges: 35592" or konect "% 35592 5881 5881".
std::optional<std::size_t> header_vertex_count(std::string_view line) {
  std::string lower(line);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (auto pos = lower.find("nodes:"); pos != std::string::npos) {
    auto tokens = split_ws(std::string_view(lower).substr(pos + 6));
    if (!tokens.empty()) {
      if (auto v = parse_int_label(tokens.front()); v && *v >= 0) return static_cast<std::size_t>(*v);
    }
    return std::nullopt;
  }
  if (line.front() == '%') {
    auto tokens = split_ws(line.substr(1));
    if (tokens.size() == 3) {
      auto m = parse_int_label(tokens[0]), r = parse_int_label(tokens[1]), c = parse_int_label(tokens[2]);
      if (m && r && c && *r == *c && *r >= 0) return static_cast<std::size_t>(*r);
    }
  }
  return std::nullopt;
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in, const ParseOptions& options, std::vector<std::string>* warnings) {
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };

  detail::LabelInterner interner;
  struct RawEdge {
    VertexId u, v;
    Sign sign;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::optional<std::size_t> declared;

  auto intern = [&](std::string_view label) { return interner.intern(label); };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.empty() || view == "\r") continue;
    if (view.front() == '#' || view.front() == '%') {
      if (options.use_vertex_count_header && !declared) declared = header_vertex_count(view);
      continue;
    }
    auto tokens = split_ws(view);
    if (tokens.size() < 3) throw InputError("expected 'u v sign', got '" + std::string(view) + "'", line_no);
    auto sign = parse_sign(tokens[2]);
    if (!sign) throw InputError("invalid sign '" + std::string(tokens[2]) + "'", line_no);
    if (tokens[0] == tokens[1]) throw InputError("self-loop on vertex " + std::string(tokens[0]), line_no);
    raw.push_back({intern(tokens[0]), intern(tokens[1]), *sign, line_no});
  }

  // Optional expansion to the declared vertex universe (integer labels only).
  if (declared && *declared > interner.size()) {
    const auto raw_labels = interner.labels();
    bool all_int = true;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& l : raw_labels) {
      auto v = parse_int_label(l);
      if (!v) {
        all_int = false;
        break;
      }
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
    const auto n_decl = static_cast<std::int64_t>(*declared);
    std::int64_t base = -1;
    if (all_int && raw_labels.empty()) base = 0;
    else if (all_int && lo >= 0 && hi <= n_decl - 1) base = 0;
    else if (all_int && lo >= 1 && hi <= n_decl) base = 1;
    if (base < 0) {
      warn("vertex-count header ignored: labels do not fit a dense 0..N-1 or 1..N range");
    } else {
      for (std::int64_t x = base; x < base + n_decl; ++x) intern(std::to_string(x));
    }
  }

  auto [remap, labels] = interner.finalize();
  const std::size_t n = labels.size();

  struct Keyed {
    std::uint64_t key;
    Sign sign;
    std::size_t line;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(raw.size());
  for (const auto& e : raw) {
    VertexId u = remap[e.u], v = remap[e.v];
    if (u > v) std::swap(u, v);
    keyed.push_back({(std::uint64_t{u} << 32) | v, e.sign, e.line});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

  std::vector<SignedEdge> edges;
  edges.reserve(keyed.size());
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].key == keyed[i - 1].key) {
      if (keyed[i].sign != keyed[i - 1].sign) {
        auto u = static_cast<VertexId>(keyed[i].key >> 32), v = static_cast<VertexId>(keyed[i].key & 0xffffffffu);
        throw InputError("conflicting signs for pair (" + labels[u] + ", " + labels[v] + "), first seen on line " +
                             std::to_string(keyed[i - 1].line),
                         keyed[i].line);
      }
      ++duplicates;
      continue;
    }
    edges.push_back({static_cast<VertexId>(keyed[i].key >> 32), static_cast<VertexId>(keyed[i].key & 0xffffffffu),
                     keyed[i].sign});
  }
  if (duplicates > 0) warn("merged " + std::to_string(duplicates) + " duplicate edge(s) with identical sign");

  return SignedGraph::from_edges(n, std::move(edges), std::move(labels));
}

SignedGraph read_edge_list_file(const std::string& path, const ParseOptions& options, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'", 0);
  return parse_edge_list(in, options, warnings);
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
  bool isolated = false;
  for (std::size_t v = 0; v < g.vertex_count() && !isolated; ++v) isolated = g.degree(static_cast<VertexId>(v)) == 0;
  if (isolated) out << "# Nodes: " << g.vertex_count() << " Edges: " << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << (e.sign == Sign::Positive ? "1" : "-1") << '\n';
  }
}

}  // namespace tolbal
