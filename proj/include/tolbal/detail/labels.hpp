#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tolbal/signed_graph.hpp"

namespace tolbal::detail {

std::optional<std::int64_t> parse_int_label(std::string_view s);

/// Assigns provisional ids in first-seen order, then a final order: numeric
/// label order if every label is an integer, lexicographic otherwise.
class LabelInterner {
 public:
  VertexId intern(std::string_view label);
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  struct Final {
    std::vector<VertexId> remap;  // provisional id -> final id
    std::vector<std::string> labels;
  };
  /// Throws InputError if two integer labels denote the same value ("7", "07").
  Final finalize() const;

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace tolbal::detail
