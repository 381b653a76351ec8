#pragma once

#include <compare>
#include <string>

#include "sparsecut/graph.hpp"

namespace sparsecut {

inline constexpr int kMaxCanonicalOrder = 10;

// Lexicographically smallest graph6 string over all vertex orderings.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Backtracks over vertex orderings position by position. Placing the vertex
// at position j fixes exactly the next j bits of the graph6 body, so any
// partial ordering whose prefix already exceeds the best one is cut off.
// Orders above kMaxCanonicalOrder raise TooLarge.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sparsecut
