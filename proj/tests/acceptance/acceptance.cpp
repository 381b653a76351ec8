// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only N] [--cubic10 FILE]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sparsecut/census.hpp"
#include "sparsecut/connectivity.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/io.hpp"
#include "sparsecut/report_json.hpp"
#include "sparsecut/witness.hpp"
#include "support/oracles.hpp"

using namespace sparsecut;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string cubic10_path = SPARSECUT_CUBIC10_CENSUS;

void census_line(Outcome& out, const std::string& name, const CensusReport& r) {
  out.detail << ' ' << name << ": checked=" << r.checked << " failures=" << r.failures;
  out.require(r.failures == 0, name + " has failures");
  out.require(r.checked > 0, name + " checked nothing");
  for (std::size_t i = 0; i < std::min<std::size_t>(r.counterexamples.size(), 3); ++i)
    out.detail << " {" << r.counterexamples[i].g6 << ": " << r.counterexamples[i].reason << '}';
}

void theorem_sweep(Outcome& out, Theorem t, int n, int max_size) {
  const auto source = builtin_source(n, max_size);
  const auto r = verify_theorem(source, t, Mode::Both);
  census_line(out, "n=" + std::to_string(n) + ",m<=" + std::to_string(max_size), r);
  out.require(r.skipped == 0, "graphs inside the bound were skipped");
  std::uint64_t witnesses = 0;
  for (const auto& [kind, count] : r.kind_hist) witnesses += count;
  out.require(witnesses == r.checked, "not every graph produced a validated witness");
}

Outcome criterion1() {
  Outcome out;
  theorem_sweep(out, Theorem::T3, 7, 10);
  theorem_sweep(out, Theorem::T3, 8, 12);
  return out;
}

Outcome criterion2() {
  Outcome out;
  theorem_sweep(out, Theorem::T4, 7, 14);
  theorem_sweep(out, Theorem::T4, 8, 16);
  return out;
}

bool lacks_witness(const Graph& g, CutKind kind) {
  try {
    oracle_min_cut_with_property(g, kind);
    return false;
  } catch (const Error& e) {
    return e.code() == ErrorCode::NoWitness;
  }
}

std::vector<VertexSet> cut_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : enumerate_minimum_cuts(g)) out.push_back(c.cut);
  return out;
}

Outcome criterion3() {
  Outcome out;
  int families = 0;
  for (int n = 7; n <= 16; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const auto g = gen_Gn(n);
    out.require(g.size() == 3 * n / 2 + 1, "G_n size" + at);
    out.require(lacks_witness(g, CutKind::Independent), "G_n has an independent minimum cut" + at);
    std::vector<VertexSet> expected;
    if (n % 2)
      expected = {VertexSet{0, (n + 1) / 2 - 1}};
    else
      expected = {VertexSet{1, n - 1}, VertexSet{n / 2 - 1, (n + 4) / 2 - 1}};
    std::sort(expected.begin(), expected.end());
    out.require(cut_sets(g) == expected, "G_n minimum cut set" + at);
    out.require(vertex_connectivity(g).kappa == 2, "kappa(G_n)" + at);
    out.require(evaluate_sharpness({Family::Gn, n}).all_hold(), "G_n claims" + at);

    const auto f = gen_Fn(n);
    out.require(f.size() == 2 * n + 1, "F_n size" + at);
    out.require(vertex_connectivity(f).kappa == 3, "kappa(F_n)" + at);
    out.require(cut_sets(f) == std::vector<VertexSet>{VertexSet{0, 1, 2}}, "F_n minimum cut set" + at);
    out.require(induced_edge_count(f, VertexSet{0, 1, 2}.mask()) == 3, "F_n cut is not a triangle" + at);
    out.require(lacks_witness(f, CutKind::Foresty), "F_n has a foresty minimum cut" + at);
    out.require(evaluate_sharpness({Family::Fn, n}).all_hold(), "F_n claims" + at);
    families += 2;
  }
  out.detail << " graphs=" << families << " (G_n and F_n, n=7..16)";
  return out;
}

Outcome criterion4() {
  Outcome out;
  census_line(out, "cubic n=8", verify_lemma(builtin_source(8, 12, 12), Lemma::L6));
  std::ifstream in(cubic10_path);
  if (in) {
    const auto source = graph6_source(in);
    const auto r = verify_lemma(source, Lemma::L6);
    census_line(out, "cubic n=10 (" + std::to_string(source.graphs.size()) + " classes)", r);
    out.require(r.skipped == 0, "order-10 census contains non-cubic graphs");
  } else {
    out.detail << " cubic n=10: no census file at " << cubic10_path;
  }
  census_line(out, "4-regular n=7", verify_lemma(builtin_source(7, 14, 14), Lemma::L9));
  census_line(out, "4-regular n=8", verify_lemma(builtin_source(8, 16, 16), Lemma::L9));
  const bool prism_none = lacks_witness(prism(), CutKind::Independent);
  const bool octa_none = lacks_witness(octahedron(), CutKind::Foresty);
  out.require(prism_none, "prism has an independent minimum cut");
  out.require(octa_none, "octahedron has a foresty minimum cut");
  out.detail << " prism:NoWitness(independent)=" << (prism_none ? "yes" : "no")
             << " octahedron:NoWitness(foresty)=" << (octa_none ? "yes" : "no");
  return out;
}

// Smallest disconnecting subset size, over adjacency masks with a plain
// stack search; shares nothing with the flow code.
int subset_kappa(int n, const std::vector<std::uint32_t>& adj) {
  const std::uint32_t all = (1u << n) - 1;
  auto connected = [&](std::uint32_t alive) {
    if (!alive) return false;
    std::uint32_t seen = alive & (~alive + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1) next |= adj[v];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == alive;
  };
  for (int k = 0; k <= n - 2; ++k)
    for (std::uint32_t s = 0; s <= all; ++s)
      if (std::popcount(s) == k && !connected(all & ~s)) return k;
  return n - 1;
}

Outcome criterion5() {
  Outcome out;
  std::uint64_t graphs = 0;
  std::uint64_t mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_census(builtin_source(n, n * (n - 1) / 2), [&](const Graph& g) {
      std::vector<std::uint32_t> adj(n);
      for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.row(v));
      ++graphs;
      if (vertex_connectivity(g).kappa != subset_kappa(n, adj)) ++mismatches;
    });
  }
  out.detail << " connected graphs n<=7: " << graphs << " mismatches=" << mismatches;
  out.require(mismatches == 0, "flow and brute-force connectivity disagree");
  out.require(graphs == 1 + 1 + 4 + 38 + 728 + 26704 + 1866256, "unexpected census size");
  return out;
}

Outcome criterion6() {
  Outcome out;
  census_line(out, "neighbor-in-every-component", verify_lemma(builtin_source(7, 21), Lemma::L5));
  census_line(out, "kappa-matching", verify_lemma(builtin_source(7, 21), Lemma::L8));
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::uint64_t lines = 0;
  std::uint64_t mismatches = 0;
  auto check_file = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++lines;
      if (to_graph6(from_graph6(line)) != line) ++mismatches;
    }
  };
  std::ifstream cubic(cubic10_path);
  if (cubic) check_file(cubic);
  // every connected graph of order 6, written as a census file
  std::stringstream census;
  enumerate_census(builtin_source(6, 15), [&](const Graph& g) { census << to_graph6(g) << '\n'; });
  check_file(census);

  std::mt19937_64 rng(20260101);
  std::uint64_t random_graphs = 0;
  for (int n = 1; n <= kMaxGraph6Order; ++n)
    for (int rep = 0; rep < 40; ++rep) {
      auto g = testing::random_graph(rng, n, (rep % 10 + 0.5) / 10.0);
      const auto text = to_graph6(g);
      ++random_graphs;
      if (!(from_graph6(text) == g) || to_graph6(from_graph6(text)) != text) ++mismatches;
    }
  out.detail << " census lines=" << lines << " random graphs (orders 1..62)=" << random_graphs
             << " mismatches=" << mismatches;
  out.require(mismatches == 0, "round trip changed bytes");
  return out;
}

Outcome criterion8() {
  Outcome out;
  struct Run {
    std::string name;
    std::function<CensusReport(int)> run;
  };
  const std::vector<Run> runs = {
      {"t3 n=7", [](int w) { return verify_theorem(builtin_source(7, 10), Theorem::T3, Mode::Both, {w}); }},
      {"t4 n=7", [](int w) { return verify_theorem(builtin_source(7, 14), Theorem::T4, Mode::Both, {w}); }},
      {"l9 n=8", [](int w) { return verify_lemma(builtin_source(8, 16, 16), Lemma::L9, {w}); }},
      {"frontier t3 n=7", [](int w) { return evaluate_sharp_frontier(7, Theorem::T3, {w}); }},
  };
  for (const auto& r : runs) {
    const auto base = to_json(r.run(1)).dump();
    bool same = true;
    for (int w : {4, 8}) same = same && to_json(r.run(w)).dump() == base;
    out.detail << ' ' << r.name << (same ? ":identical" : ":DIFFERENT");
    out.require(same, r.name + " differs across worker counts");
  }
  return out;
}

const char* const kNames[] = {
    "",
    "independent minimum cut census (n=7 m<=10, n=8 m<=12)",
    "foresty minimum cut census (n=7 m<=14, n=8 m<=16)",
    "sharpness of G_n and F_n for n=7..16",
    "cubic and 4-regular sweeps, negative fixtures",
    "flow connectivity equals brute force on all connected graphs n<=7",
    "minimum cut structure over builtin(7, 21)",
    "graph6 round trip",
    "determinism across 1, 4 and 8 workers",
};

using Criterion = Outcome (*)();
const Criterion kCriteria[] = {nullptr,     criterion1, criterion2, criterion3, criterion4,
                               criterion5,  criterion6, criterion7, criterion8};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--cubic10" && i + 1 < argc) {
      cubic10_path = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--only N] [--cubic10 FILE]\n";
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::cerr << "acceptance: criterion must be 1..8\n";
    return 2;
  }
  bool all = true;
  for (int c = 1; c <= 8; ++c) {
    if (only && c != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = kCriteria[c]();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c << ": " << kNames[c] << " |"
              << out.detail.str() << " (" << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
