#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

inline constexpr int kMaxGraph6Order = 62;

// graph6: N(n) as one byte n+63, then the upper triangle in column-major
// order packed six bits per byte, each byte offset by 63. A leading
// ">>graph6<<" header and trailing whitespace are tolerated on decode.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text, std::size_t line = 0);

// Bit index of the pair (i, j), i < j, in graph6 order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Edge list: "n m" then m lines "u v", 0-based. Writer emits sorted edges.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

struct NumberedGraph {
  std::size_t line = 0;
  Graph graph;
};

// One graph per non-blank line; malformed lines raise ParseError(line).
std::vector<NumberedGraph> read_graph6_stream(std::istream& in);

}  // namespace sparsecut
