#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace sparsecut {

inline constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Forward iteration over the set bits of a mask in ascending order.
class BitIterator {
 public:
  using value_type = int;
  using difference_type = std::ptrdiff_t;

  BitIterator() = default;
  explicit BitIterator(Mask m) : m_(m) {}

  int operator*() const { return std::countr_zero(m_); }
  BitIterator& operator++() {
    m_ &= m_ - 1;
    return *this;
  }
  BitIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  bool operator==(const BitIterator& o) const { return m_ == o.m_; }

 private:
  Mask m_ = 0;
};

struct Bits {
  Mask m;
  BitIterator begin() const { return BitIterator(m); }
  BitIterator end() const { return BitIterator(0); }
};

// A sorted, duplicate-free set of vertex ids backed by a 64-bit mask.
// Ordering is lexicographic on the sorted member lists.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask m) : mask_(m) {}
  VertexSet(std::initializer_list<int> members);

  static VertexSet from_members(std::span<const int> members);

  constexpr Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int v) const { return v >= 0 && v < 64 && (mask_ >> v) & 1; }
  int front() const { return std::countr_zero(mask_); }
  std::vector<int> members() const;

  BitIterator begin() const { return BitIterator(mask_); }
  BitIterator end() const { return BitIterator(0); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  Mask mask_ = 0;
};

using ComponentPartition = std::vector<VertexSet>;

// Simple undirected graph on vertices 0..order-1 with one adjacency row per
// vertex. Immutable once built; all mutation goes through the factories.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph. Throws BadOrder for order outside [0, kMaxOrder].
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges);
  // Rows must describe a symmetric irreflexive relation; verified.
  static Graph from_rows(int order, std::span<const Mask> rows);

  int order() const { return order_; }
  int size() const { return size_; }
  Mask vertices() const { return low_bits(order_); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }
  Mask row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  std::vector<Edge> edges() const;

  // Induced subgraph on `keep`, relabeled to 0..|keep|-1 in ascending order.
  Graph induced(Mask keep) const;
  // G - v with vertices above v shifted down by one.
  Graph remove_vertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  void link(int u, int v);

  int order_ = 0;
  int size_ = 0;
  std::array<Mask, kMaxOrder> rows_{};
};

// Unchecked fast construction used by enumeration hot loops.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  GraphBuilder& add(int u, int v);
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

Mask closed_mask(const Graph& g, int v);

// ---- constructors -------------------------------------------------------

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// ---- predicates and measurements ---------------------------------------

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degrees;
};

DegreeProfile degree_profile(const Graph& g);

VertexSet neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);
int degree_in(const Graph& g, int v, VertexSet s);

std::vector<Edge> edge_boundary(const Graph& g, VertexSet s, VertexSet t);
int set_degree(const Graph& g, VertexSet s);

ComponentPartition components(const Graph& g, VertexSet removed = {});
bool is_connected(const Graph& g);

bool is_independent(const Graph& g, VertexSet s);
bool induces_forest(const Graph& g, VertexSet s);
bool is_regular(const Graph& g, int k);

// Mask-level helpers shared by the algorithms. `alive` restricts the graph.
Mask component_of(const Graph& g, int start, Mask alive);
int count_components(const Graph& g, Mask alive);
bool is_connected_on(const Graph& g, Mask alive);
int induced_edge_count(const Graph& g, Mask s);
bool mask_independent(const Graph& g, Mask s);
bool mask_forest(const Graph& g, Mask s);

void check_vertex(const Graph& g, int v);
void check_set(const Graph& g, VertexSet s);

}  // namespace sparsecut
