#include "tolbal/detail/labels.hpp"

#include <algorithm>
#include <charconv>

#include "tolbal/graph_io.hpp"

namespace tolbal::detail {

std::optional<std::int64_t> parse_int_label(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) return std::nullopt;
  return v;
}

VertexId LabelInterner::intern(std::string_view label) {
  auto [it, fresh] = ids_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
  if (fresh) labels_.emplace_back(label);
  return it->second;
}

LabelInterner::Final LabelInterner::finalize() const {
  const std::size_t n = labels_.size();
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);

  std::vector<std::int64_t> keys;
  keys.reserve(n);
  for (const auto& l : labels_) {
    auto v = parse_int_label(l);
    if (!v) break;
    keys.push_back(*v);
  }
  if (keys.size() == n) {
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return keys[a] < keys[b]; });
    for (std::size_t i = 1; i < n; ++i) {
      if (keys[order[i]] == keys[order[i - 1]]) {
        throw InputError("labels '" + labels_[order[i - 1]] + "' and '" + labels_[order[i]] + "' denote the same vertex", 0);
      }
    }
  } else {
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  }

  Final out;
  out.remap.resize(n);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.remap[order[i]] = static_cast<VertexId>(i);
    out.labels[i] = labels_[order[i]];
  }
  return out;
}

}  // namespace tolbal::detail
