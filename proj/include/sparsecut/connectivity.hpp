#pragma once

#include <optional>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

struct ConnectivityResult {
  int kappa = 0;
  // Absent for complete graphs; empty for disconnected ones.
  std::optional<VertexSet> witness_cut;
  bool complete = false;
};

struct CutReport {
  VertexSet cut;
  bool is_cut = false;
  bool is_minimum = false;
  bool independent = false;
  bool foresty = false;
  ComponentPartition parts;
};

using PathSystem = std::vector<std::vector<int>>;

// Exact vertex connectivity by unit-capacity flow on the split digraph.
// Disconnected graphs report kappa 0 with an empty witness; complete graphs
// report order-1 and no witness. Order 0 raises EmptyGraph.
ConnectivityResult vertex_connectivity(const Graph& g);

// Every vertex subset of size kappa whose removal disconnects g, classified,
// in lexicographic order.
std::vector<CutReport> enumerate_minimum_cuts(const Graph& g);

CutReport classify_cut(const Graph& g, VertexSet s);

// k vertex-disjoint (S,T)-paths, each listed from its S end. Raises
// InfeasibleError (carrying the achievable maximum) when fewer exist.
PathSystem disjoint_paths(const Graph& g, VertexSet s, VertexSet t, int k);

// kappa(g) edges of [S, V(H)] forming a matching, ordered by their S end.
std::vector<Edge> cut_component_matching(const Graph& g, VertexSet s, VertexSet h);

// Whether every vertex of the minimum cut s has a neighbor in every
// component of g - s.
bool check_lemma5(const Graph& g, VertexSet s);

// ---- building blocks used by the witness and census code ----------------

// cut_component_matching with the connectivity already known.
std::vector<Edge> cut_component_matching(const Graph& g, VertexSet s, VertexSet h, int kappa);

// The neighbor-in-every-component test behind check_lemma5, without the
// minimality precondition check.
bool every_member_touches_every_component(const Graph& g, Mask cut);

// Calls fn(mask) for every disconnecting vertex set of size `kappa`, in
// lexicographic order, until fn returns false. With kappa = connectivity
// these are exactly the minimum cuts.
template <typename Fn>
void for_each_cut_of_size(const Graph& g, int kappa, Fn&& fn);

inline bool disconnects(const Graph& g, Mask s);

}  // namespace sparsecut

#include "sparsecut/detail/cut_scan.hpp"
