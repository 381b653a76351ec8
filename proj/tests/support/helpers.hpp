#pragma once

#include <optional>

#include <doctest.h>

#include "sparsecut/error.hpp"
#include "sparsecut/graph.hpp"

namespace sparsecut::testing {

// Runs fn and reports the ErrorCode it raised, if any.
template <typename Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline VertexSet vs(std::initializer_list<int> members) { return VertexSet(members); }

inline Graph complete_bipartite(int a, int b) { return join(Graph(a), Graph(b)); }

inline Graph wheel(int rim) { return join(Graph(1), cycle(rim)); }

// Circulant on n vertices with connection set {±d : d in steps}.
inline Graph circulant(int n, std::initializer_list<int> steps) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int d : steps) edges.push_back({i, (i + d) % n});
  return Graph::from_edges(n, edges);
}

}  // namespace sparsecut::testing
