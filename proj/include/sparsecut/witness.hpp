#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecut/connectivity.hpp"
#include "sparsecut/graph.hpp"

namespace sparsecut {

enum class CutKind : std::uint8_t { Independent, Foresty };

std::string_view to_string(CutKind kind);
CutKind parse_cut_kind(std::string_view text);

// Proof-case tags recorded by the witness algorithms, in the order taken.
enum class TraceTag : std::uint8_t {
  Oracle,
  CubicKappa1,
  CubicPairIndependent,
  CubicPairSwap,
  CubicNeighborhoodIndependent,
  CubicSwapP,
  CubicSwapQ,
  QuarticKappaAtMost2,
  QuarticTripleForest,
  QuarticTripleSwap,
  QuarticNeighborhoodForest,
  QuarticNeighborhoodC4,
  QuarticNeighborhoodC3K1,
  IndependentKappa1,
  IndependentBaseOracle,
  IndependentCubic,
  IndependentDegree2Cut,
  IndependentDegree2Recurse,
  IndependentKappaChanged,
  ForestyKappaAtMost2,
  ForestyBaseOracle,
  ForestyQuartic,
  ForestyDegree3Cut,
  ForestyDegree3Recurse,
  ForestyKappaChanged,
};

std::string_view to_string(TraceTag tag);

// Fixed-capacity tag sequence; the sparse algorithms recurse at most
// order - 7 times, so 128 entries cover every graph the library accepts.
class Trace {
 public:
  static constexpr std::size_t kCapacity = 128;

  void push(TraceTag tag);
  std::size_t size() const { return size_; }
  const TraceTag* begin() const { return tags_.data(); }
  const TraceTag* end() const { return tags_.data() + size_; }
  TraceTag operator[](std::size_t i) const { return tags_[i]; }
  bool contains(TraceTag tag) const;

  std::vector<std::string> labels() const;
  // Labels joined with '>' (histogram key).
  std::string joined() const;

  friend bool operator==(const Trace& a, const Trace& b);
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b);

 private:
  std::array<TraceTag, kCapacity> tags_{};
  std::size_t size_ = 0;
};

struct WitnessCertificate {
  VertexSet cut;
  CutKind kind = CutKind::Independent;
  Trace trace;
  bool validated = false;
};

// Lexicographically smallest minimum vertex cut satisfying `kind`, by
// exhaustive scan. Raises NoWitness when none exists.
WitnessCertificate oracle_min_cut_with_property(const Graph& g, CutKind kind);

// Connected cubic graphs of order >= 8.
WitnessCertificate independent_min_cut_cubic(const Graph& g);

// Connected 4-regular graphs of order >= 7.
WitnessCertificate foresty_min_cut_4regular(const Graph& g);

// Connected graphs of order n >= 7 and size <= floor(3n/2).
WitnessCertificate independent_min_cut_sparse(const Graph& g);

// Connected graphs of order n >= 7 and size <= 2n.
WitnessCertificate foresty_min_cut_sparse(const Graph& g);

// Variants reusing an already computed connectivity result of `g`. The
// census calls these to avoid repeating the flow computation.
WitnessCertificate oracle_min_cut_with_property(const Graph& g, CutKind kind,
                                                const ConnectivityResult& conn);
WitnessCertificate independent_min_cut_sparse(const Graph& g, const ConnectivityResult& conn);
WitnessCertificate foresty_min_cut_sparse(const Graph& g, const ConnectivityResult& conn);

constexpr int independent_size_bound(int n) { return 3 * n / 2; }
constexpr int foresty_size_bound(int n) { return 2 * n; }

bool satisfies(const Graph& g, Mask cut, CutKind kind);

}  // namespace sparsecut
