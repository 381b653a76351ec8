#include "sparsecut/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <set>
#include <thread>

#include "sparsecut/connectivity.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/witness.hpp"

namespace sparsecut {

std::string_view to_string(Theorem t) { return t == Theorem::T3 ? "t3" : "t4"; }

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Constructive: return "constructive";
    case Mode::Oracle: return "oracle";
    case Mode::Both: return "both";
  }
  return "?";
}

std::string_view to_string(Lemma l) {
  switch (l) {
    case Lemma::L5: return "l5";
    case Lemma::L6: return "l6";
    case Lemma::L8: return "l8";
    case Lemma::L9: return "l9";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "t3" || text == "T3") return Theorem::T3;
  if (text == "t4" || text == "T4") return Theorem::T4;
  fail(ErrorCode::ParseError, "unknown theorem '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "constructive") return Mode::Constructive;
  if (text == "oracle") return Mode::Oracle;
  if (text == "both") return Mode::Both;
  fail(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "'");
}

Lemma parse_lemma(std::string_view text) {
  if (text == "l5" || text == "L5") return Lemma::L5;
  if (text == "l6" || text == "L6") return Lemma::L6;
  if (text == "l8" || text == "L8") return Lemma::L8;
  if (text == "l9" || text == "L9") return Lemma::L9;
  fail(ErrorCode::ParseError, "unknown lemma '" + std::string(text) + "'");
}

BuiltinSource builtin_source(int order, int max_size, int min_size) {
  if (order < 1 || order > kMaxBuiltinOrder)
    fail(ErrorCode::BadOrder, "builtin census supports orders 1.." + std::to_string(kMaxBuiltinOrder) +
                                  ", got " + std::to_string(order));
  return {order, max_size, min_size};
}

StreamSource graph6_source(std::istream& in) { return {read_graph6_stream(in)}; }

namespace {

// Chunks have a fixed size so the merge order, and with it every report,
// is the same for any number of workers.
constexpr int kMaskChunkBits = 16;
constexpr std::size_t kStreamChunk = 256;

struct PairTable {
  std::array<std::int8_t, 64> i{};
  std::array<std::int8_t, 64> j{};
  PairTable() {
    for (int b = 1; b < kMaxOrder && pair_index(0, b) < 64; ++b)
      for (int a = 0; a < b && pair_index(a, b) < 64; ++a) {
        i[pair_index(a, b)] = static_cast<std::int8_t>(a);
        j[pair_index(a, b)] = static_cast<std::int8_t>(b);
      }
  }
};

const PairTable& pairs() {
  static const PairTable table;
  return table;
}

std::size_t chunk_count(const CensusSource& source) {
  if (const auto* b = std::get_if<BuiltinSource>(&source)) {
    if (b->order < 1 || b->order > kMaxBuiltinOrder)
      fail(ErrorCode::BadOrder, "builtin census supports orders 1.." + std::to_string(kMaxBuiltinOrder));
    const int e = b->order * (b->order - 1) / 2;
    return e <= kMaskChunkBits ? 1 : std::size_t{1} << (e - kMaskChunkBits);
  }
  const auto& s = std::get<StreamSource>(source);
  return (s.graphs.size() + kStreamChunk - 1) / kStreamChunk;
}

template <typename Fn>
void for_each_in_chunk(const CensusSource& source, std::size_t chunk, Fn&& fn) {
  if (const auto* b = std::get_if<BuiltinSource>(&source)) {
    const int n = b->order;
    const int e = n * (n - 1) / 2;
    const int width = std::min(e, kMaskChunkBits);
    const std::uint64_t first = static_cast<std::uint64_t>(chunk) << width;
    const std::uint64_t last = first + (std::uint64_t{1} << width);
    const auto& pt = pairs();
    for (std::uint64_t mask = first; mask < last; ++mask) {
      const int pc = std::popcount(mask);
      if (pc > b->max_size || pc < b->min_size || pc < n - 1) continue;
      GraphBuilder builder(n);
      for (int k : Bits{mask}) builder.add(pt.i[k], pt.j[k]);
      Graph g = std::move(builder).build();
      if (!is_connected(g)) continue;
      fn(g);
    }
    return;
  }
  const auto& graphs = std::get<StreamSource>(source).graphs;
  const std::size_t lo = chunk * kStreamChunk;
  const std::size_t hi = std::min(graphs.size(), lo + kStreamChunk);
  for (std::size_t i = lo; i < hi; ++i) fn(graphs[i].graph);
}

// Runs visit(graph, acc) over every chunk and merges the per-chunk
// accumulators in chunk order.
template <typename Acc, typename Visit>
Acc sweep(const CensusSource& source, int workers, Visit visit) {
  const std::size_t chunks = chunk_count(source);
  std::vector<Acc> parts(chunks);
  auto run_chunk = [&](std::size_t c) {
    for_each_in_chunk(source, c, [&](const Graph& g) { visit(g, parts[c]); });
  };
  if (workers <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(static_cast<std::size_t>(workers), chunks);
    for (int w = 0; w < count; ++w) {
      pool.emplace_back([&, w] {
        (void)w;
        while (!failed.load()) {
          const std::size_t c = next.fetch_add(1);
          if (c >= chunks) break;
          try {
            run_chunk(c);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  Acc total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

struct ReportAcc {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::map<int, std::uint64_t> kappa_hist;
  std::map<Trace, std::uint64_t> trace_hist;
  std::map<CutKind, std::uint64_t> kind_hist;
  bool family_present = false;

  void record_failure(const Graph& g, std::string reason) {
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples)
      counterexamples.push_back({to_graph6(g), std::move(reason)});
  }

  void record_witness(const WitnessCertificate& cert, const Graph& g) {
    ++trace_hist[cert.trace];
    ++kind_hist[mask_independent(g, cert.cut.mask()) ? CutKind::Independent : CutKind::Foresty];
  }

  void merge(ReportAcc&& o) {
    checked += o.checked;
    skipped += o.skipped;
    failures += o.failures;
    for (auto& c : o.counterexamples) {
      if (counterexamples.size() >= kMaxCounterexamples) break;
      counterexamples.push_back(std::move(c));
    }
    for (auto [k, v] : o.kappa_hist) kappa_hist[k] += v;
    for (const auto& [k, v] : o.trace_hist) trace_hist[k] += v;
    for (auto [k, v] : o.kind_hist) kind_hist[k] += v;
    family_present = family_present || o.family_present;
  }

  CensusReport finish() && {
    CensusReport r;
    r.checked = checked;
    r.skipped = skipped;
    r.failures = failures;
    r.counterexamples = std::move(counterexamples);
    r.kappa_hist = std::move(kappa_hist);
    for (const auto& [trace, count] : trace_hist) r.trace_hist[trace.joined()] += count;
    for (auto [kind, count] : kind_hist) r.kind_hist[std::string(to_string(kind))] += count;
    return r;
  }
};

std::string describe(const Error& e) { return e.what(); }

std::string cut_label(Mask m) {
  std::string s = "{";
  for (int v : Bits{m}) {
    if (s.size() > 1) s += ',';
    s += std::to_string(v);
  }
  return s + "}";
}

int theorem_bound(Theorem t, int n) {
  return t == Theorem::T3 ? independent_size_bound(n) : foresty_size_bound(n);
}

CutKind theorem_kind(Theorem t) { return t == Theorem::T3 ? CutKind::Independent : CutKind::Foresty; }

}  // namespace

void enumerate_census(const CensusSource& source, const std::function<void(const Graph&)>& fn) {
  const std::size_t chunks = chunk_count(source);
  for (std::size_t c = 0; c < chunks; ++c) for_each_in_chunk(source, c, fn);
}

std::uint64_t count_census(const CensusSource& source) {
  std::uint64_t count = 0;
  enumerate_census(source, [&](const Graph&) { ++count; });
  return count;
}

std::vector<CanonicalForm> isomorphism_classes(const CensusSource& source, SweepOptions opt) {
  struct Acc {
    std::set<CanonicalForm> forms;
    void merge(Acc&& o) { forms.merge(o.forms); }
  };
  auto acc = sweep<Acc>(source, opt.workers,
                        [](const Graph& g, Acc& a) { a.forms.insert(canonical_form(g)); });
  return {acc.forms.begin(), acc.forms.end()};
}

CensusReport verify_theorem(const CensusSource& source, Theorem theorem, Mode mode, SweepOptions opt) {
  const CutKind kind = theorem_kind(theorem);
  auto visit = [&](const Graph& g, ReportAcc& acc) {
    const int n = g.order();
    if (n < 7 || g.size() > theorem_bound(theorem, n) || !is_connected(g)) {
      ++acc.skipped;
      return;
    }
    ++acc.checked;
    const auto conn = vertex_connectivity(g);
    ++acc.kappa_hist[conn.kappa];
    std::string reasons;
    if (mode != Mode::Oracle) {
      try {
        const auto cert = theorem == Theorem::T3 ? independent_min_cut_sparse(g, conn)
                                                 : foresty_min_cut_sparse(g, conn);
        acc.record_witness(cert, g);
      } catch (const Error& e) {
        reasons += "constructive: " + describe(e);
      }
    }
    if (mode != Mode::Constructive) {
      try {
        const auto cert = oracle_min_cut_with_property(g, kind, conn);
        if (mode == Mode::Oracle) acc.record_witness(cert, g);
      } catch (const Error& e) {
        if (!reasons.empty()) reasons += "; ";
        reasons += "oracle: " + describe(e);
      }
    }
    if (!reasons.empty()) acc.record_failure(g, std::move(reasons));
  };
  return sweep<ReportAcc>(source, opt.workers, visit).finish();
}

CensusReport evaluate_sharp_frontier(int order, Theorem theorem, SweepOptions opt) {
  if (order < 7 || order > kMaxBuiltinOrder)
    fail(ErrorCode::BadOrder, "frontier scans need order 7.." + std::to_string(kMaxBuiltinOrder));
  const int size = theorem_bound(theorem, order) + 1;
  const CutKind kind = theorem_kind(theorem);
  const Graph family = theorem == Theorem::T3 ? gen_Gn(order) : gen_Fn(order);
  const auto family_form = canonical_form(family);
  auto sorted_degrees = [](const Graph& g) {
    auto d = degree_profile(g).degrees;
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto family_degrees = sorted_degrees(family);

  auto visit = [&](const Graph& g, ReportAcc& acc) {
    const auto conn = vertex_connectivity(g);
    if (conn.complete) {
      ++acc.skipped;
      return;
    }
    ++acc.checked;
    ++acc.kappa_hist[conn.kappa];
    try {
      acc.record_witness(oracle_min_cut_with_property(g, kind, conn), g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoWitness) throw;
      acc.record_failure(g, "no " + std::string(to_string(kind)) + " minimum vertex cut");
      if (!acc.family_present && sorted_degrees(g) == family_degrees && canonical_form(g) == family_form)
        acc.family_present = true;
    }
  };
  auto acc = sweep<ReportAcc>(builtin_source(order, size, size), opt.workers, visit);
  const bool present = acc.family_present;
  auto report = std::move(acc).finish();
  report.frontier = FrontierInfo{theorem == Theorem::T3 ? "Gn" : "Fn", family_form.graph6, present};
  return report;
}

CensusReport verify_sharp_frontier(int order, Theorem theorem, SweepOptions opt) {
  auto report = evaluate_sharp_frontier(order, theorem, opt);
  if (report.failures == 0)
    fail(ErrorCode::ClaimFailed, "no graph at the size bound + 1 lacks the witness");
  if (!report.frontier->family_present)
    fail(ErrorCode::ClaimFailed, "extremal family graph is not among the counterexamples");
  return report;
}

CensusReport verify_lemma(const CensusSource& source, Lemma lemma, SweepOptions opt) {
  auto visit = [&](const Graph& g, ReportAcc& acc) {
    const int n = g.order();
    bool eligible = n > 0 && is_connected(g);
    if (lemma == Lemma::L6) eligible = eligible && n >= 8 && is_regular(g, 3);
    if (lemma == Lemma::L9) eligible = eligible && n >= 7 && is_regular(g, 4);
    if (eligible && (lemma == Lemma::L5 || lemma == Lemma::L8))
      eligible = g.size() < n * (n - 1) / 2;  // complete graphs have no cut
    if (!eligible) {
      ++acc.skipped;
      return;
    }
    ++acc.checked;
    try {
      switch (lemma) {
        case Lemma::L5:
        case Lemma::L8: {
          const auto conn = vertex_connectivity(g);
          ++acc.kappa_hist[conn.kappa];
          std::string reason;
          for_each_cut_of_size(g, conn.kappa, [&](Mask cut) {
            if (lemma == Lemma::L5) {
              if (!every_member_touches_every_component(g, cut))
                reason = "cut " + cut_label(cut) + " misses a component";
              return reason.empty();
            }
            Mask rest = g.vertices() & ~cut;
            while (rest && reason.empty()) {
              const Mask part = component_of(g, std::countr_zero(rest), rest);
              rest &= ~part;
              if (std::popcount(part) < conn.kappa) continue;
              const auto m = cut_component_matching(g, VertexSet(cut), VertexSet(part), conn.kappa);
              if (static_cast<int>(m.size()) != conn.kappa)
                reason = "cut " + cut_label(cut) + " has no kappa-matching into " + cut_label(part);
            }
            return reason.empty();
          });
          if (!reason.empty()) acc.record_failure(g, reason);
          break;
        }
        case Lemma::L6: {
          const auto cert = independent_min_cut_cubic(g);
          ++acc.kappa_hist[cert.cut.size()];
          acc.record_witness(cert, g);
          break;
        }
        case Lemma::L9: {
          const auto cert = foresty_min_cut_4regular(g);
          ++acc.kappa_hist[cert.cut.size()];
          acc.record_witness(cert, g);
          break;
        }
      }
    } catch (const Error& e) {
      acc.record_failure(g, describe(e));
    }
  };
  return sweep<ReportAcc>(source, opt.workers, visit).finish();
}

}  // namespace sparsecut
