#include "sparsecut/graph.hpp"

#include <algorithm>
#include <string>

#include "sparsecut/error.hpp"

namespace sparsecut {

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(from_members(std::span<const int>(members.begin(), members.size()))) {}

VertexSet VertexSet::from_members(std::span<const int> members) {
  Mask m = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxOrder) fail(ErrorCode::BadVertex, "vertex id " + std::to_string(v));
    m |= bit(v);
  }
  return VertexSet(m);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  Mask x = a.mask_;
  Mask y = b.mask_;
  while (x && y) {
    int vx = std::countr_zero(x);
    int vy = std::countr_zero(y);
    if (vx != vy) return vx <=> vy;
    x &= x - 1;
    y &= y - 1;
  }
  // a proper prefix sorts first
  return (x != 0) <=> (y != 0);
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    fail(ErrorCode::BadOrder, "order " + std::to_string(order) + " outside [0, 64]");
}

void Graph::link(int u, int v) {
  if (!((rows_[u] >> v) & 1)) {
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++size_;
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      fail(ErrorCode::BadVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") outside order " + std::to_string(order));
    if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    g.link(u, v);
  }
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int order, std::span<const Mask> rows) {
  Graph g(order);
  if (static_cast<int>(rows.size()) != order)
    fail(ErrorCode::BadOrder, "row count does not match order");
  Mask all = g.vertices();
  for (int v = 0; v < order; ++v) {
    if (rows[v] & ~all) fail(ErrorCode::BadVertex, "row mentions vertex beyond order");
    if ((rows[v] >> v) & 1) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
    for (int w : Bits{rows[v]}) {
      if (!((rows[w] >> v) & 1)) fail(ErrorCode::BadVertex, "asymmetric adjacency rows");
      if (v < w) g.link(v, w);
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u)
    for (int v : Bits{rows_[u] & ~low_bits(u + 1)}) out.push_back({u, v});
  return out;
}

Graph Graph::induced(Mask keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (int v : Bits{keep}) index[v] = k++;
  GraphBuilder b(k);
  for (int u : Bits{keep})
    for (int v : Bits{rows_[u] & keep & ~low_bits(u + 1)}) b.add(index[u], index[v]);
  return std::move(b).build();
}

Graph Graph::remove_vertex(int v) const {
  check_vertex(*this, v);
  return induced(vertices() & ~bit(v));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_ || a.size_ != b.size_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.order_, b.rows_.begin());
}

GraphBuilder::GraphBuilder(int order) : g_(order) {}

GraphBuilder& GraphBuilder::add(int u, int v) {
  g_.link(u, v);
  return *this;
}

Mask closed_mask(const Graph& g, int v) { return g.row(v) | bit(v); }

// ---- constructors -------------------------------------------------------

Graph path(int n) {
  if (n < 1) fail(ErrorCode::BadOrder, "path needs at least one vertex");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::BadOrder, "cycle needs at least three vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add(i, (i + 1) % n);
  return std::move(b).build();
}

Graph complete(int n) {
  if (n < 1) fail(ErrorCode::BadOrder, "complete graph needs at least one vertex");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(shift + h.order());
  for (auto [u, v] : g.edges()) b.add(u, v);
  for (auto [u, v] : h.edges()) b.add(u + shift, v + shift);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(shift + h.order());
  for (auto [u, v] : g.edges()) b.add(u, v);
  for (auto [u, v] : h.edges()) b.add(u + shift, v + shift);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add(u, v + shift);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add(u, v);
  return std::move(b).build();
}

// ---- predicates ----------------------------------------------------------

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    fail(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " not in graph of order " +
                                   std::to_string(g.order()));
}

void check_set(const Graph& g, VertexSet s) {
  if (s.mask() & ~g.vertices())
    fail(ErrorCode::BadVertex, "vertex set mentions ids beyond order " + std::to_string(g.order()));
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::EmptyGraph, "degree profile of the empty graph");
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

VertexSet neighborhood(const Graph& g, int v) {
  check_vertex(g, v);
  return VertexSet(g.row(v));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  check_vertex(g, v);
  return VertexSet(closed_mask(g, v));
}

int degree_in(const Graph& g, int v, VertexSet s) {
  check_vertex(g, v);
  check_set(g, s);
  return std::popcount(g.row(v) & s.mask());
}

std::vector<Edge> edge_boundary(const Graph& g, VertexSet s, VertexSet t) {
  check_set(g, s);
  check_set(g, t);
  if (s.mask() & t.mask()) fail(ErrorCode::SetsOverlap, "edge boundary of overlapping sets");
  std::vector<Edge> out;
  for (int u : s)
    for (int v : Bits{g.row(u) & t.mask()}) out.push_back({std::min(u, v), std::max(u, v)});
  std::sort(out.begin(), out.end());
  return out;
}

int set_degree(const Graph& g, VertexSet s) {
  check_set(g, s);
  const Mask outside = g.vertices() & ~s.mask();
  int total = 0;
  for (int u : s) total += std::popcount(g.row(u) & outside);
  return total;
}

Mask component_of(const Graph& g, int start, Mask alive) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int v : Bits{frontier}) next |= g.row(v);
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int count_components(const Graph& g, Mask alive) {
  int count = 0;
  while (alive) {
    alive &= ~component_of(g, std::countr_zero(alive), alive);
    ++count;
  }
  return count;
}

bool is_connected_on(const Graph& g, Mask alive) {
  if (!alive) return false;
  return component_of(g, std::countr_zero(alive), alive) == alive;
}

ComponentPartition components(const Graph& g, VertexSet removed) {
  check_set(g, removed);
  ComponentPartition parts;
  Mask alive = g.vertices() & ~removed.mask();
  while (alive) {
    Mask c = component_of(g, std::countr_zero(alive), alive);
    parts.emplace_back(c);
    alive &= ~c;
  }
  return parts;
}

bool is_connected(const Graph& g) { return is_connected_on(g, g.vertices()); }

int induced_edge_count(const Graph& g, Mask s) {
  int twice = 0;
  for (int v : Bits{s}) twice += std::popcount(g.row(v) & s);
  return twice / 2;
}

bool mask_independent(const Graph& g, Mask s) {
  for (int v : Bits{s})
    if (g.row(v) & s) return false;
  return true;
}

bool mask_forest(const Graph& g, Mask s) {
  // A graph is a forest iff |E| = |V| - (number of components).
  return induced_edge_count(g, s) == std::popcount(s) - count_components(g, s);
}

bool is_independent(const Graph& g, VertexSet s) {
  check_set(g, s);
  return mask_independent(g, s.mask());
}

bool induces_forest(const Graph& g, VertexSet s) {
  check_set(g, s);
  return mask_forest(g, s.mask());
}

bool is_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

}  // namespace sparsecut
