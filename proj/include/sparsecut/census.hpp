#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sparsecut/canonical.hpp"
#include "sparsecut/graph.hpp"
#include "sparsecut/io.hpp"

namespace sparsecut {

inline constexpr int kMaxBuiltinOrder = 8;
inline constexpr std::size_t kMaxCounterexamples = 100;

// Every connected labeled graph on `order` vertices whose size lies in
// [min_size, max_size], emitted in ascending edge-mask order (bit k of the
// mask is the k-th pair in graph6 order).
struct BuiltinSource {
  int order = 0;
  int max_size = 0;
  int min_size = 0;
};

// Pre-decoded graph6 stream; graphs keep their input line numbers.
struct StreamSource {
  std::vector<NumberedGraph> graphs;
};

using CensusSource = std::variant<BuiltinSource, StreamSource>;

BuiltinSource builtin_source(int order, int max_size, int min_size = 0);
StreamSource graph6_source(std::istream& in);

enum class Theorem { T3, T4 };
enum class Mode { Constructive, Oracle, Both };
enum class Lemma { L5, L6, L8, L9 };

std::string_view to_string(Theorem t);
std::string_view to_string(Mode m);
std::string_view to_string(Lemma l);
Theorem parse_theorem(std::string_view text);
Mode parse_mode(std::string_view text);
Lemma parse_lemma(std::string_view text);

struct Counterexample {
  std::string g6;
  std::string reason;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct FrontierInfo {
  std::string family;
  std::string family_canonical;
  bool family_present = false;
  friend bool operator==(const FrontierInfo&, const FrontierInfo&) = default;
};

struct CensusReport {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  // Total number of failing graphs; `counterexamples` keeps the first 100.
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::map<int, std::uint64_t> kappa_hist;
  std::map<std::string, std::uint64_t> trace_hist;
  std::map<std::string, std::uint64_t> kind_hist;
  std::optional<FrontierInfo> frontier;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct SweepOptions {
  int workers = 1;
};

// Calls fn on every graph of the source, in emission order, single-threaded.
void enumerate_census(const CensusSource& source, const std::function<void(const Graph&)>& fn);

std::uint64_t count_census(const CensusSource& source);

// Distinct canonical forms among the source graphs, sorted.
std::vector<CanonicalForm> isomorphism_classes(const CensusSource& source, SweepOptions opt = {});

CensusReport verify_theorem(const CensusSource& source, Theorem theorem, Mode mode,
                            SweepOptions opt = {});

// All connected graphs on `order` (7 or 8) vertices with exactly one edge
// more than the theorem allows; records those lacking the witness kind and
// whether the matching extremal family member is among them.
CensusReport evaluate_sharp_frontier(int order, Theorem theorem, SweepOptions opt = {});

// As above; raises ClaimFailed when no counterexample exists or the family
// graph is missing from them.
CensusReport verify_sharp_frontier(int order, Theorem theorem, SweepOptions opt = {});

CensusReport verify_lemma(const CensusSource& source, Lemma lemma, SweepOptions opt = {});

}  // namespace sparsecut
