#include "sparsecut/connectivity.hpp"

#include <algorithm>
#include <string>

#include "sparsecut/error.hpp"
#include "sparsecut/flow.hpp"

namespace sparsecut {

namespace {

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

int min_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

CutReport classify_with_kappa(const Graph& g, VertexSet s, int kappa) {
  CutReport r;
  r.cut = s;
  r.parts = components(g, s);
  r.is_cut = r.parts.size() >= 2;
  r.is_minimum = r.is_cut && s.size() == kappa;
  r.independent = mask_independent(g, s.mask());
  r.foresty = r.independent || mask_forest(g, s.mask());
  return r;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::EmptyGraph, "connectivity of the empty graph");
  if (!is_connected(g)) return {0, VertexSet{}, false};
  if (is_complete(g)) return {n - 1, std::nullopt, true};

  // Fix a minimum-degree vertex v. Either some minimum cut misses v, and then
  // it separates v from a non-neighbor, or every minimum cut contains v, and
  // then it separates two nonadjacent neighbors of v. Scanning those pairs in
  // lexicographic order keeps the first minimizer.
  const int v = min_degree_vertex(g);
  const Mask nv = g.row(v);
  int best = n - 1;
  Mask best_cut = 0;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      const bool through_v = s == v || t == v;
      const bool neighbor_pair = (nv & bit(s)) && (nv & bit(t));
      if (!through_v && !neighbor_pair) continue;
      auto flow = local_connectivity(g, s, t, best);
      if (!flow.truncated && flow.value < best) {
        best = flow.value;
        best_cut = flow.separator;
      }
    }
  }
  if (!disconnects(g, best_cut) || std::popcount(best_cut) != best)
    fail(ErrorCode::AlgorithmBug, "flow separator does not disconnect the graph");
  return {best, VertexSet(best_cut), false};
}

std::vector<CutReport> enumerate_minimum_cuts(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::EmptyGraph, "minimum cuts of the empty graph");
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "minimum cuts need a connected graph");
  if (is_complete(g)) fail(ErrorCode::NoCutExists, "complete graphs have no vertex cut");
  const auto conn = vertex_connectivity(g);
  std::vector<CutReport> out;
  for_each_cut_of_size(g, conn.kappa, [&](Mask s) {
    out.push_back(classify_with_kappa(g, VertexSet(s), conn.kappa));
    return true;
  });
  const bool witness_listed = std::any_of(out.begin(), out.end(), [&](const CutReport& r) {
    return r.cut == *conn.witness_cut;
  });
  if (!witness_listed) fail(ErrorCode::AlgorithmBug, "flow witness missing from enumeration");
  return out;
}

CutReport classify_cut(const Graph& g, VertexSet s) {
  if (g.order() == 0) fail(ErrorCode::EmptyGraph, "cut classification on the empty graph");
  check_set(g, s);
  if (s.mask() == g.vertices()) fail(ErrorCode::BadCut, "a cut must leave at least one vertex");
  return classify_with_kappa(g, s, vertex_connectivity(g).kappa);
}

PathSystem disjoint_paths(const Graph& g, VertexSet s, VertexSet t, int k) {
  check_set(g, s);
  check_set(g, t);
  if (s.mask() & t.mask()) fail(ErrorCode::SetsOverlap, "(S,T)-paths need disjoint S and T");
  if (k < 0) fail(ErrorCode::PreconditionFailed, "path count must be nonnegative, got " + std::to_string(k));
  auto flow = max_disjoint_paths(g, s.mask(), t.mask(), 0, k, true);
  if (flow.value < k) throw InfeasibleError(k, flow.value);
  return std::move(flow.paths);
}

std::vector<Edge> cut_component_matching(const Graph& g, VertexSet s, VertexSet h) {
  if (g.order() == 0) fail(ErrorCode::EmptyGraph, "matching on the empty graph");
  check_set(g, s);
  return cut_component_matching(g, s, h, vertex_connectivity(g).kappa);
}

std::vector<Edge> cut_component_matching(const Graph& g, VertexSet s, VertexSet h, int kappa) {
  check_set(g, s);
  check_set(g, h);
  if (!disconnects(g, s.mask())) fail(ErrorCode::BadCut, "S is not a vertex cut");
  const Mask rest = g.vertices() & ~s.mask();
  if (h.empty() || (h.mask() & s.mask()) || component_of(g, h.front(), rest) != h.mask())
    fail(ErrorCode::PreconditionFailed, "H is not a component of G - S");
  if (h.size() < kappa)
    fail(ErrorCode::PreconditionFailed, "component has " + std::to_string(h.size()) +
                                            " vertices, fewer than kappa = " + std::to_string(kappa));
  PathSystem paths;
  try {
    paths = disjoint_paths(g, s, h, kappa);
  } catch (const InfeasibleError& e) {
    fail(ErrorCode::AlgorithmBug, std::string("no kappa disjoint paths into a component: ") + e.what());
  }
  std::vector<Edge> matching;
  for (const auto& p : paths) {
    if (p.size() != 2) fail(ErrorCode::AlgorithmBug, "(S,V(H))-path is longer than an edge");
    matching.push_back({p.front(), p.back()});
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

bool every_member_touches_every_component(const Graph& g, Mask cut) {
  Mask rest = g.vertices() & ~cut;
  while (rest) {
    const Mask part = component_of(g, std::countr_zero(rest), rest);
    for (int x : Bits{cut})
      if (!(g.row(x) & part)) return false;
    rest &= ~part;
  }
  return true;
}

bool check_lemma5(const Graph& g, VertexSet s) {
  const auto report = classify_cut(g, s);
  if (!report.is_minimum) fail(ErrorCode::PreconditionFailed, "S is not a minimum vertex cut");
  return every_member_touches_every_component(g, s.mask());
}

}  // namespace sparsecut
