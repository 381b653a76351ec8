#include <doctest.h>

#include <random>

#include "sparsecut/connectivity.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/witness.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/regular.hpp"

using namespace sparsecut;
using namespace sparsecut::testing;

namespace {

// Re-derives every verdict from brute force instead of trusting the
// certificate's own validation.
void check_sound(const Graph& g, const WitnessCertificate& c) {
  CHECK(c.validated);
  CHECK(c.cut.size() == brute_force_kappa(g));
  std::vector<bool> removed(g.order(), false);
  for (int v : c.cut) removed[v] = true;
  CHECK_FALSE(connected_without(adjacency_list(g), removed));
  if (c.kind == CutKind::Independent)
    CHECK(brute_force_independent(g, c.cut.members()));
  else
    CHECK(brute_force_forest(g, c.cut.members()));
  auto report = classify_cut(g, c.cut);
  CHECK(report.is_minimum);
  CHECK((c.kind == CutKind::Independent ? report.independent : report.foresty));
}

std::optional<std::vector<int>> first_brute_force_cut(const Graph& g, CutKind kind) {
  for (const auto& s : brute_force_cuts(g, brute_force_kappa(g)))
    if (kind == CutKind::Independent ? brute_force_independent(g, s) : brute_force_forest(g, s)) return s;
  return std::nullopt;
}

int recursion_steps(const Trace& t) {
  int steps = 0;
  for (auto tag : t)
    if (tag == TraceTag::IndependentDegree2Recurse || tag == TraceTag::ForestyDegree3Recurse) ++steps;
  return steps;
}

Graph q3_circulant8() { return circulant(8, {1, 2}); }

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("trace labels") {
  Trace t;
  t.push(TraceTag::IndependentDegree2Recurse);
  t.push(TraceTag::IndependentBaseOracle);
  CHECK(t.labels() == std::vector<std::string>{"T3.delta2.recurse", "T3.base.oracle"});
  CHECK(t.joined() == "T3.delta2.recurse>T3.base.oracle");
  CHECK(to_string(TraceTag::Oracle) == "oracle");
  CHECK(to_string(TraceTag::CubicKappa1) == "L6.kappa1");
  CHECK(to_string(TraceTag::QuarticNeighborhoodC3K1) == "L9.case2.2.C3K1");
  CHECK(parse_cut_kind("foresty") == CutKind::Foresty);
  CHECK(error_of([] { parse_cut_kind("tree"); }) == ErrorCode::ParseError);
}

TEST_CASE("exhaustive oracle") {
  CHECK(error_of([] { oracle_min_cut_with_property(prism(), CutKind::Independent); }) == ErrorCode::NoWitness);

  auto f = oracle_min_cut_with_property(prism(), CutKind::Foresty);
  CHECK(f.cut == vs({0, 1, 5}));  // N(2), the lexicographically first N(v)
  CHECK(f.trace.labels() == std::vector<std::string>{"oracle"});
  check_sound(prism(), f);

  auto c4 = oracle_min_cut_with_property(cycle(4), CutKind::Independent);
  CHECK(c4.cut == vs({0, 2}));
  check_sound(cycle(4), c4);

  // K_{3,3}, the other cubic graph of order 6, does have one
  auto k33 = oracle_min_cut_with_property(complete_bipartite(3, 3), CutKind::Independent);
  CHECK(k33.cut == vs({0, 1, 2}));

  CHECK(error_of([] { oracle_min_cut_with_property(complete(4), CutKind::Foresty); }) == ErrorCode::NoCutExists);
  CHECK(error_of([] { oracle_min_cut_with_property(octahedron(), CutKind::Foresty); }) == ErrorCode::NoWitness);
}

TEST_CASE("cubic independent cut") {
  auto q3 = cube_q3();
  auto c = independent_min_cut_cubic(q3);
  CHECK(c.cut == vs({1, 2, 4}));
  CHECK(c.trace.contains(TraceTag::CubicNeighborhoodIndependent));
  check_sound(q3, c);

  auto p = independent_min_cut_cubic(petersen());
  check_sound(petersen(), p);
  CHECK(first_brute_force_cut(petersen(), CutKind::Independent).has_value());

  CHECK(error_of([] { independent_min_cut_cubic(prism()); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { independent_min_cut_cubic(cycle(8)); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { independent_min_cut_cubic(disjoint_union(cube_q3(), cube_q3())); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("cubic independent cut on every connected cubic graph of order 8 and 10") {
  for (int n : {8, 10}) {
    auto graphs = connected_regular_graphs(n, 3);
    CHECK(graphs.size() == (n == 8 ? 5u : 19u));
    for (const auto& g : graphs) check_sound(g, independent_min_cut_cubic(g));
  }
}

TEST_CASE("cubic graphs with connectivity 1 and 2") {
  // two K4-minus-an-edge blocks, each closed by a new vertex, joined by a bridge
  auto bridge = Graph::from_edges(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1},
                                       {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {9, 5}, {9, 6},
                                       {4, 9}});
  REQUIRE(is_regular(bridge, 3));
  auto b = independent_min_cut_cubic(bridge);
  CHECK(b.cut.size() == 1);
  check_sound(bridge, b);

  int kappa_two = 0;
  for (const auto& g : connected_regular_graphs(8, 3)) {
    auto c = independent_min_cut_cubic(g);
    if (c.trace.contains(TraceTag::CubicPairSwap) || c.trace.contains(TraceTag::CubicPairIndependent)) ++kappa_two;
  }
  CHECK(kappa_two >= 1);
}

TEST_CASE("4-regular foresty cut") {
  auto c7 = complement(cycle(7));
  auto r = foresty_min_cut_4regular(c7);
  CHECK(r.cut.size() == brute_force_kappa(c7));
  check_sound(c7, r);

  auto circ = q3_circulant8();
  REQUIRE(is_regular(circ, 4));
  check_sound(circ, foresty_min_cut_4regular(circ));

  CHECK(error_of([] { foresty_min_cut_4regular(octahedron()); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { foresty_min_cut_4regular(petersen()); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("4-regular foresty cut on every connected 4-regular graph of order 7 to 10") {
  const std::size_t expected[] = {2, 6, 16, 59};
  for (int n = 7; n <= 10; ++n) {
    auto graphs = connected_regular_graphs(n, 4);
    CHECK(graphs.size() == expected[n - 7]);
    for (const auto& g : graphs) check_sound(g, foresty_min_cut_4regular(g));
  }
}

TEST_CASE("sparse independent cut") {
  auto c7 = independent_min_cut_sparse(cycle(7));
  CHECK(c7.cut == vs({1, 6}));
  CHECK(c7.trace.labels() == std::vector<std::string>{"T3.delta2.independent"});
  check_sound(cycle(7), c7);

  auto g = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}});
  auto base = independent_min_cut_sparse(g);
  CHECK(base.cut == vs({1, 4}));
  CHECK(first_brute_force_cut(g, CutKind::Independent) == std::vector<int>{1, 4});
  CHECK(base.trace.labels() == std::vector<std::string>{"T3.base.oracle"});

  auto p = independent_min_cut_sparse(petersen());
  CHECK(p.trace.contains(TraceTag::IndependentCubic));
  check_sound(petersen(), p);

  CHECK(error_of([] { independent_min_cut_sparse(gen_Gn(11)); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { independent_min_cut_sparse(cycle(6)); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { independent_min_cut_sparse(disjoint_union(cycle(4), cycle(4))); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("sparse foresty cut") {
  auto w = wheel(6);
  auto wc = foresty_min_cut_sparse(w);
  CHECK(wc.cut == vs({0, 2, 6}));  // N(1), the induced path 2-0-6
  CHECK(wc.trace.labels() == std::vector<std::string>{"T4.delta3.forest"});
  check_sound(w, wc);

  // F_8 without the chord v4v6
  auto f8 = gen_Fn(8);
  std::vector<Edge> edges;
  for (auto e : f8.edges())
    if (!(e == Edge{3, 5})) edges.push_back(e);
  auto h = Graph::from_edges(8, edges);
  REQUIRE(h.size() == 16);
  auto hc = foresty_min_cut_sparse(h);
  CHECK(hc.cut == vs({1, 2, 4}));
  CHECK(hc.trace.labels() == std::vector<std::string>{"T4.delta3.forest"});
  CHECK(brute_force_kappa(h) == 3);
  check_sound(h, hc);

  auto apex = Graph::from_edges(8, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5},
                                    {3, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  REQUIRE(apex.size() == 14);
  auto ac = foresty_min_cut_sparse(apex);
  // N(0) is a triangle, so vertex 0 is deleted first
  CHECK(ac.trace[0] == TraceTag::ForestyDegree3Recurse);
  CHECK(ac.trace.size() == 2);
  check_sound(apex, ac);

  CHECK(error_of([] { foresty_min_cut_sparse(gen_Fn(9)); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("sparse algorithms are sound on random graphs within the size bounds") {
  std::mt19937_64 rng(3);
  int independent_runs = 0;
  int foresty_runs = 0;
  for (int iter = 0; iter < 600; ++iter) {
    const int n = 7 + static_cast<int>(rng() % 6);
    const bool want_foresty = iter % 2;
    const int bound = want_foresty ? foresty_size_bound(n) : independent_size_bound(n);
    auto g = random_connected_graph(rng, n, static_cast<int>(rng() % (bound - n + 2)));
    if (g.size() > bound) continue;
    const auto kind = want_foresty ? CutKind::Foresty : CutKind::Independent;
    auto c = want_foresty ? foresty_min_cut_sparse(g) : independent_min_cut_sparse(g);
    CHECK(c.kind == kind);
    check_sound(g, c);
    CHECK(recursion_steps(c.trace) <= n - 7);
    // the oracle agrees that a witness of this kind exists
    CHECK(oracle_min_cut_with_property(g, kind).validated);
    (want_foresty ? foresty_runs : independent_runs)++;
  }
  CHECK(independent_runs > 100);
  CHECK(foresty_runs > 100);
}

TEST_CASE("repeated deletion of degree-2 vertices with adjacent neighbors") {
  // Cycle on 0..k-1 with one triangle tip per cycle edge: every tip has
  // degree 2 and adjacent neighbors, so the search has to delete tips.
  for (int k = 4; k <= 12; ++k) {
    const int n = 2 * k;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
      edges.push_back({i, (i + 1) % k});
      edges.push_back({k + i, i});
      edges.push_back({k + i, (i + 1) % k});
    }
    auto g = Graph::from_edges(n, edges);
    REQUIRE(g.size() == independent_size_bound(n));
    auto c = independent_min_cut_sparse(g);
    CHECK(recursion_steps(c.trace) >= 1);
    CHECK(recursion_steps(c.trace) <= n - 7);
    CHECK_FALSE(c.trace.contains(TraceTag::IndependentKappaChanged));
    CHECK(classify_cut(g, c.cut).is_minimum);
    CHECK(classify_cut(g, c.cut).independent);
  }
}

}
