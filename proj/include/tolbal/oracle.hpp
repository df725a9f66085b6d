#pragma once

#include <cstdint>
#include <stdexcept>

#include "tolbal/balance.hpp"
#include "tolbal/solution.hpp"

namespace tolbal {

/// Raised when an exhaustive routine is asked to handle too large an input.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum number of imbalanced edges over all full colorings.
std::int64_t frustration_index(const SignedGraph& g, std::size_t max_n = 26);

struct TbiResult {
  Score score;        // m, L(G) and a*m - b*L
  Coloring coloring;  // a coloring attaining L(G)
};

TbiResult exact_tbi(const SignedGraph& g, const Tolerance& tol, std::size_t max_n = 26);

enum class Problem { P1, P2, P3, P4, P5, P6 };

struct ExactResult {
  Solution solution;  // score taken under the requested tolerance
  /// P1/P3: vertex count, P2/P4: edge count, P5: TBI, P6: polarity.
  Rational objective{0};
  std::int64_t frustration = 0;  // of the chosen subgraph (P1-P5)
  bool found = false;
};

/// Exact optimum over connected induced subgraphs (P1-P5, n <= 15) or over
/// all sign vectors in {-1,0,1}^n (P6, n <= 10). Ties: larger objective, then
/// more vertices, then the lexicographically smallest vertex set.
ExactResult exact_problem(const SignedGraph& g, const Tolerance& tol, Problem which);

}  // namespace tolbal
