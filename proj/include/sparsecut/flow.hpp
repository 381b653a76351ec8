#pragma once

#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

struct DisjointPathFlow {
  int value = 0;
  // True when the search stopped at the requested limit; `separator` is then
  // not meaningful.
  bool truncated = false;
  // Vertex set of size `value` meeting every source-to-sink path, closest to
  // the sources. Only set when the flow ran to completion.
  Mask separator = 0;
  std::vector<std::vector<int>> paths;
};

// Maximum number of vertex-disjoint paths that start in `sources`, end in
// `sinks`, avoid `removed`, and never pass through a source or sink as an
// internal vertex. A vertex in both sets counts as a one-vertex path.
//
// Works on the split digraph: every vertex v becomes v_in -> v_out with
// capacity 1, every edge uv becomes u_out -> v_in and v_out -> u_in with
// unbounded capacity. Augmenting paths are found by BFS.
//
// Stops once `limit` paths are found (limit < 0 means no limit).
DisjointPathFlow max_disjoint_paths(const Graph& g, Mask sources, Mask sinks, Mask removed,
                                    int limit = -1, bool want_paths = false);

// Number of internally disjoint s-t paths for nonadjacent s != t, together
// with a minimum s-t separator when not truncated.
DisjointPathFlow local_connectivity(const Graph& g, int s, int t, int limit = -1);

}  // namespace sparsecut
