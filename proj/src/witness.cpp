#include "sparsecut/witness.hpp"

#include <algorithm>
#include <string>

#include "sparsecut/error.hpp"

namespace sparsecut {

std::string_view to_string(CutKind kind) {
  return kind == CutKind::Independent ? "independent" : "foresty";
}

CutKind parse_cut_kind(std::string_view text) {
  if (text == "independent") return CutKind::Independent;
  if (text == "foresty") return CutKind::Foresty;
  fail(ErrorCode::ParseError, "unknown cut kind '" + std::string(text) + "'");
}

std::string_view to_string(TraceTag tag) {
  switch (tag) {
    case TraceTag::Oracle: return "oracle";
    case TraceTag::CubicKappa1: return "L6.kappa1";
    case TraceTag::CubicPairIndependent: return "L6.case1.independent";
    case TraceTag::CubicPairSwap: return "L6.case1.swap";
    case TraceTag::CubicNeighborhoodIndependent: return "L6.case2.independent";
    case TraceTag::CubicSwapP: return "L6.case2.swap_p";
    case TraceTag::CubicSwapQ: return "L6.case2.swap_q";
    case TraceTag::QuarticKappaAtMost2: return "L9.kappa_le2";
    case TraceTag::QuarticTripleForest: return "L9.case1.forest";
    case TraceTag::QuarticTripleSwap: return "L9.case1.swap";
    case TraceTag::QuarticNeighborhoodForest: return "L9.case2.forest";
    case TraceTag::QuarticNeighborhoodC4: return "L9.case2.1.C4";
    case TraceTag::QuarticNeighborhoodC3K1: return "L9.case2.2.C3K1";
    case TraceTag::IndependentKappa1: return "T3.kappa1";
    case TraceTag::IndependentBaseOracle: return "T3.base.oracle";
    case TraceTag::IndependentCubic: return "T3.delta3";
    case TraceTag::IndependentDegree2Cut: return "T3.delta2.independent";
    case TraceTag::IndependentDegree2Recurse: return "T3.delta2.recurse";
    case TraceTag::IndependentKappaChanged: return "T3.recurse.kappa_changed";
    case TraceTag::ForestyKappaAtMost2: return "T4.kappa_le2";
    case TraceTag::ForestyBaseOracle: return "T4.base.oracle";
    case TraceTag::ForestyQuartic: return "T4.delta4";
    case TraceTag::ForestyDegree3Cut: return "T4.delta3.forest";
    case TraceTag::ForestyDegree3Recurse: return "T4.delta3.recurse";
    case TraceTag::ForestyKappaChanged: return "T4.recurse.kappa_changed";
  }
  return "?";
}

void Trace::push(TraceTag tag) {
  if (size_ == kCapacity) fail(ErrorCode::AlgorithmBug, "trace overflow");
  tags_[size_++] = tag;
}

bool Trace::contains(TraceTag tag) const { return std::find(begin(), end(), tag) != end(); }

std::vector<std::string> Trace::labels() const {
  std::vector<std::string> out;
  for (TraceTag t : *this) out.emplace_back(to_string(t));
  return out;
}

std::string Trace::joined() const {
  std::string out;
  for (TraceTag t : *this) {
    if (!out.empty()) out += '>';
    out += to_string(t);
  }
  return out;
}

bool operator==(const Trace& a, const Trace& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool satisfies(const Graph& g, Mask cut, CutKind kind) {
  return kind == CutKind::Independent ? mask_independent(g, cut) : mask_forest(g, cut);
}

namespace {

Mask single(Mask m, const char* what) {
  if (std::popcount(m) != 1) fail(ErrorCode::AlgorithmBug, what);
  return m;
}

// Maps a vertex set of G - v back to the labels of G.
Mask lift(Mask m, int removed) {
  const Mask low = m & low_bits(removed);
  const Mask high = m & ~low_bits(removed);
  return low | (high << 1);
}

int first_vertex_of_degree(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == d) return v;
  return -1;
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Mask oracle_mask(const Graph& g, int kappa, CutKind kind) {
  Mask found = 0;
  bool any = false;
  for_each_cut_of_size(g, kappa, [&](Mask s) {
    if (satisfies(g, s, kind)) {
      found = s;
      any = true;
      return false;
    }
    return true;
  });
  if (!any)
    fail(ErrorCode::NoWitness, "no " + std::string(to_string(kind)) + " minimum vertex cut exists");
  return found;
}

Mask witness_mask(const ConnectivityResult& conn) {
  return conn.witness_cut ? conn.witness_cut->mask() : 0;
}

// Independent minimum cut of a connected cubic graph of order >= 8.
Mask cubic_cut(const Graph& g, const ConnectivityResult& conn, Trace& trace) {
  const Mask w = witness_mask(conn);
  switch (conn.kappa) {
    case 1:
      trace.push(TraceTag::CubicKappa1);
      return w;
    case 2: {
      const int x = std::countr_zero(w);
      const int y = 63 - std::countl_zero(w);
      if (!g.adjacent(x, y)) {
        trace.push(TraceTag::CubicPairIndependent);
        return w;
      }
      // x has one neighbor in each of the two components of G - {x, y}.
      const Mask rest = g.vertices() & ~w;
      const Mask h = component_of(g, std::countr_zero(rest), rest);
      const Mask p = single(g.row(x) & h, "cut vertex with several neighbors in a component");
      trace.push(TraceTag::CubicPairSwap);
      return p | bit(y);
    }
    case 3: {
      const int v = 0;
      const Mask s = g.row(v);
      if (mask_independent(g, s)) {
        trace.push(TraceTag::CubicNeighborhoodIndependent);
        return s;
      }
      if (induced_edge_count(g, s) != 1)
        fail(ErrorCode::AlgorithmBug, "neighborhood of a 3-connected cubic graph is not K2+K1");
      int x = -1;
      for (int a : Bits{s})
        if (g.row(a) & s) {
          x = a;
          break;
        }
      const int y = std::countr_zero(g.row(x) & s);
      const int z = std::countr_zero(s & ~bit(x) & ~bit(y));
      const Mask t = g.vertices() & ~closed_mask(g, v);
      const Mask p = single(g.row(x) & t, "x has no unique neighbor outside N[v]");
      const Mask q = single(g.row(y) & t, "y has no unique neighbor outside N[v]");
      if (!(g.row(z) & p)) {
        trace.push(TraceTag::CubicSwapP);
        return p | bit(y) | bit(z);
      }
      if (!(g.row(z) & q)) {
        trace.push(TraceTag::CubicSwapQ);
        return q | bit(x) | bit(z);
      }
      fail(ErrorCode::AlgorithmBug, "both p and q are adjacent to z");
    }
    default:
      fail(ErrorCode::AlgorithmBug, "cubic graph with connectivity " + std::to_string(conn.kappa));
  }
}

// Foresty minimum cut of a connected 4-regular graph of order >= 7.
Mask quartic_cut(const Graph& g, const ConnectivityResult& conn, Trace& trace) {
  const Mask w = witness_mask(conn);
  if (conn.kappa <= 2) {
    trace.push(TraceTag::QuarticKappaAtMost2);
    return w;
  }
  if (conn.kappa == 3) {
    if (mask_forest(g, w)) {
      trace.push(TraceTag::QuarticTripleForest);
      return w;
    }
    const Mask rest = g.vertices() & ~w;
    const Mask c1 = component_of(g, std::countr_zero(rest), rest);
    const Mask c2 = rest & ~c1;
    if (!c2 || component_of(g, std::countr_zero(c2), c2) != c2)
      fail(ErrorCode::AlgorithmBug, "triangle cut does not leave exactly two components");
    // larger side; ties go to the component with the smaller minimum
    const Mask larger = std::popcount(c2) > std::popcount(c1) ? c2 : c1;
    const int x = std::countr_zero(w);
    const Mask u = single(g.row(x) & larger, "x has no unique neighbor in the larger component");
    trace.push(TraceTag::QuarticTripleSwap);
    return u | (w & ~bit(x));
  }
  if (conn.kappa != 4)
    fail(ErrorCode::AlgorithmBug, "4-regular graph with connectivity " + std::to_string(conn.kappa));

  const int v = 0;
  const Mask t = g.row(v);
  if (mask_forest(g, t)) {
    trace.push(TraceTag::QuarticNeighborhoodForest);
    return t;
  }
  const Mask outside = g.vertices() & ~closed_mask(g, v);
  for (int a : Bits{t})
    if (std::popcount(g.row(a) & t) > 2)
      fail(ErrorCode::AlgorithmBug, "neighborhood vertex with three neighbors inside N(v)");
  const int edges = induced_edge_count(g, t);
  Mask swap_from = 0;
  if (edges == 4) {
    swap_from = t;  // C4: every vertex qualifies
    trace.push(TraceTag::QuarticNeighborhoodC4);
  } else if (edges == 3) {
    for (int a : Bits{t})
      if (std::popcount(g.row(a) & t) == 2) swap_from |= bit(a);
    if (std::popcount(swap_from) != 3) fail(ErrorCode::AlgorithmBug, "N(v) is not C3+K1");
    trace.push(TraceTag::QuarticNeighborhoodC3K1);
  } else {
    fail(ErrorCode::AlgorithmBug, "cyclic N(v) is neither C4 nor C3+K1");
  }
  const int x = std::countr_zero(swap_from);
  const Mask f = single(g.row(x) & outside, "x has no unique neighbor outside N[v]");
  return f | (t & ~bit(x));
}

Mask independent_sparse_cut(const Graph& g, const ConnectivityResult& conn, Trace& trace) {
  const int n = g.order();
  if (conn.kappa <= 1) {
    trace.push(TraceTag::IndependentKappa1);
    return witness_mask(conn);
  }
  // A degree-2 vertex with nonadjacent neighbors gives the cut directly at
  // every order, so it is tried before the order-7 base case.
  const int delta = min_degree(g);
  const int v = delta == 2 ? first_vertex_of_degree(g, 2) : -1;
  if (v >= 0) {
    const int x = std::countr_zero(g.row(v));
    const int y = 63 - std::countl_zero(g.row(v));
    if (!g.adjacent(x, y)) {
      trace.push(TraceTag::IndependentDegree2Cut);
      return bit(x) | bit(y);
    }
  }
  if (n == 7) {
    trace.push(TraceTag::IndependentBaseOracle);
    return oracle_mask(g, conn.kappa, CutKind::Independent);
  }
  if (delta == 3) {
    if (!is_regular(g, 3)) fail(ErrorCode::AlgorithmBug, "minimum degree 3 within the bound but not cubic");
    trace.push(TraceTag::IndependentCubic);
    return cubic_cut(g, conn, trace);
  }
  if (delta != 2) fail(ErrorCode::AlgorithmBug, "unexpected minimum degree " + std::to_string(delta));

  trace.push(TraceTag::IndependentDegree2Recurse);
  const Graph h = g.remove_vertex(v);
  if (h.size() > independent_size_bound(n - 1))
    fail(ErrorCode::AlgorithmBug, "size bound lost after deleting a degree-2 vertex");
  const auto conn_h = vertex_connectivity(h);
  if (conn_h.kappa != 2) trace.push(TraceTag::IndependentKappaChanged);
  return lift(independent_sparse_cut(h, conn_h, trace), v);
}

Mask foresty_sparse_cut(const Graph& g, const ConnectivityResult& conn, Trace& trace) {
  const int n = g.order();
  if (conn.kappa <= 2) {
    trace.push(TraceTag::ForestyKappaAtMost2);
    return witness_mask(conn);
  }
  const int delta = min_degree(g);
  const int v = delta == 3 ? first_vertex_of_degree(g, 3) : -1;
  if (v >= 0 && mask_forest(g, g.row(v))) {
    trace.push(TraceTag::ForestyDegree3Cut);
    return g.row(v);
  }
  if (n == 7) {
    trace.push(TraceTag::ForestyBaseOracle);
    return oracle_mask(g, conn.kappa, CutKind::Foresty);
  }
  if (delta == 4) {
    if (!is_regular(g, 4)) fail(ErrorCode::AlgorithmBug, "minimum degree 4 within the bound but not 4-regular");
    trace.push(TraceTag::ForestyQuartic);
    return quartic_cut(g, conn, trace);
  }
  if (delta != 3) fail(ErrorCode::AlgorithmBug, "unexpected minimum degree " + std::to_string(delta));

  trace.push(TraceTag::ForestyDegree3Recurse);
  const Graph h = g.remove_vertex(v);
  if (h.size() > foresty_size_bound(n - 1))
    fail(ErrorCode::AlgorithmBug, "size bound lost after deleting a degree-3 vertex");
  const auto conn_h = vertex_connectivity(h);
  if (conn_h.kappa != 3) trace.push(TraceTag::ForestyKappaChanged);
  return lift(foresty_sparse_cut(h, conn_h, trace), v);
}

WitnessCertificate certify(const Graph& g, const ConnectivityResult& conn, Mask cut, CutKind kind,
                           Trace trace) {
  const bool ok = std::popcount(cut) == conn.kappa && disconnects(g, cut) && satisfies(g, cut, kind);
  if (!ok)
    fail(ErrorCode::AlgorithmBug, "produced set is not a " + std::string(to_string(kind)) +
                                      " minimum vertex cut (trace " + trace.joined() + ")");
  return {VertexSet(cut), kind, trace, true};
}

void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::PreconditionFailed, what);
}

void require_cut_graph(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::EmptyGraph, "witness search on the empty graph");
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "witness search needs a connected graph");
}

}  // namespace

WitnessCertificate oracle_min_cut_with_property(const Graph& g, CutKind kind,
                                                const ConnectivityResult& conn) {
  if (conn.complete) fail(ErrorCode::NoCutExists, "complete graphs have no vertex cut");
  Trace trace;
  trace.push(TraceTag::Oracle);
  return certify(g, conn, oracle_mask(g, conn.kappa, kind), kind, trace);
}

WitnessCertificate oracle_min_cut_with_property(const Graph& g, CutKind kind) {
  require_cut_graph(g);
  return oracle_min_cut_with_property(g, kind, vertex_connectivity(g));
}

WitnessCertificate independent_min_cut_cubic(const Graph& g) {
  require(g.order() >= 8, "cubic witness search needs order >= 8");
  require(is_regular(g, 3), "graph is not cubic");
  require(is_connected(g), "graph is not connected");
  const auto conn = vertex_connectivity(g);
  Trace trace;
  const Mask cut = cubic_cut(g, conn, trace);
  return certify(g, conn, cut, CutKind::Independent, trace);
}

WitnessCertificate foresty_min_cut_4regular(const Graph& g) {
  require(g.order() >= 7, "4-regular witness search needs order >= 7");
  require(is_regular(g, 4), "graph is not 4-regular");
  require(is_connected(g), "graph is not connected");
  const auto conn = vertex_connectivity(g);
  Trace trace;
  const Mask cut = quartic_cut(g, conn, trace);
  return certify(g, conn, cut, CutKind::Foresty, trace);
}

WitnessCertificate independent_min_cut_sparse(const Graph& g, const ConnectivityResult& conn) {
  const int n = g.order();
  require(n >= 7, "order must be at least 7");
  require(g.size() <= independent_size_bound(n),
          "size " + std::to_string(g.size()) + " exceeds floor(3n/2) = " +
              std::to_string(independent_size_bound(n)));
  require(is_connected(g), "graph is not connected");
  Trace trace;
  const Mask cut = independent_sparse_cut(g, conn, trace);
  return certify(g, conn, cut, CutKind::Independent, trace);
}

WitnessCertificate independent_min_cut_sparse(const Graph& g) {
  require(g.order() >= 7, "order must be at least 7");
  require(is_connected(g), "graph is not connected");
  return independent_min_cut_sparse(g, vertex_connectivity(g));
}

WitnessCertificate foresty_min_cut_sparse(const Graph& g, const ConnectivityResult& conn) {
  const int n = g.order();
  require(n >= 7, "order must be at least 7");
  require(g.size() <= foresty_size_bound(n),
          "size " + std::to_string(g.size()) + " exceeds 2n = " + std::to_string(foresty_size_bound(n)));
  require(is_connected(g), "graph is not connected");
  Trace trace;
  const Mask cut = foresty_sparse_cut(g, conn, trace);
  return certify(g, conn, cut, CutKind::Foresty, trace);
}

WitnessCertificate foresty_min_cut_sparse(const Graph& g) {
  require(g.order() >= 7, "order must be at least 7");
  require(is_connected(g), "graph is not connected");
  return foresty_min_cut_sparse(g, vertex_connectivity(g));
}

}  // namespace sparsecut
