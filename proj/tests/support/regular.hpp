#pragma once

#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut::testing {

// One representative per isomorphism class of connected k-regular graphs on
// n vertices (n <= 10), sorted by canonical graph6. Labeled graphs are built
// by backtracking with N(0) fixed to {1..k}; every class has such a
// labeling, so deduplication by canonical form leaves exactly one per class.
std::vector<Graph> connected_regular_graphs(int n, int k);

}  // namespace sparsecut::testing
