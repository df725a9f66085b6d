#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tolbal/signed_graph.hpp"

namespace tolbal {

/// Malformed or inconsistent input; carries the 1-based line number (0 if none).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParseOptions {
  /// Honor a "# Nodes: N" (SNAP) or "% m n n" (konect size line) header and
  /// keep declared vertices that never appear in an edge.
  bool use_vertex_count_header = true;
};

/// Reads `u v s` lines (s in {1, -1, +, -, +1}); extra trailing columns are
/// ignored. Lines starting with '#' or '%' are comments. Duplicate pairs with
/// the same sign are merged with a warning; conflicting signs and self-loops
/// throw InputError.
SignedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {},
                            std::vector<std::string>* warnings = nullptr);

SignedGraph read_edge_list_file(const std::string& path, const ParseOptions& options = {},
                                std::vector<std::string>* warnings = nullptr);

/// Writes `u v s` per edge, sorted by (u, v), using original labels. Emits a
/// "# Nodes: N" header when the graph has isolated vertices.
void write_edge_list(std::ostream& out, const SignedGraph& g);

}  // namespace tolbal
