#include "sparsecut/families.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "sparsecut/error.hpp"
#include "sparsecut/witness.hpp"

namespace sparsecut {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Gn: return "Gn";
    case Family::Fn: return "Fn";
    case Family::Prism: return "prism";
    case Family::Octahedron: return "octahedron";
    case Family::Q3: return "q3";
    case Family::Petersen: return "petersen";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gn") return Family::Gn;
  if (lower == "fn") return Family::Fn;
  if (lower == "prism") return Family::Prism;
  if (lower == "octahedron") return Family::Octahedron;
  if (lower == "q3") return Family::Q3;
  if (lower == "petersen") return Family::Petersen;
  fail(ErrorCode::ParseError, "unknown family '" + std::string(text) + "'");
}

namespace {

// Builds from 1-based labels and refuses repeated edges.
class LabeledBuilder {
 public:
  explicit LabeledBuilder(int n) : b_(n), n_(n) {}

  void add(int a, int b) {
    if (a < 1 || b < 1 || a > n_ || b > n_ || a == b)
      fail(ErrorCode::AlgorithmBug, "construction used label out of range");
    edges_.push_back({a - 1, b - 1});
    b_.add(a - 1, b - 1);
  }

  Graph build() && {
    Graph g = std::move(b_).build();
    if (g.size() != static_cast<int>(edges_.size()))
      fail(ErrorCode::AlgorithmBug, "construction generated a repeated edge");
    return g;
  }

 private:
  GraphBuilder b_;
  std::vector<Edge> edges_;
  int n_;
};

void require_family_order(int n) {
  if (n < 7) fail(ErrorCode::BadOrder, "G_n and F_n are defined for n >= 7");
  if (n > kMaxOrder) fail(ErrorCode::BadOrder, "order above " + std::to_string(kMaxOrder));
}

}  // namespace

Graph gen_Gn(int n) {
  require_family_order(n);
  LabeledBuilder b(n);
  if (n % 2 == 1) {
    const int mid = (n + 1) / 2;
    for (int i = 1; i <= n - 1; ++i) b.add(i, i % (n - 1) + 1);
    b.add(1, mid);
    b.add(1, n);
    b.add(mid, n);
    for (int i = 2; i <= (n - 1) / 2; ++i) b.add(i, n + 1 - i);
  } else {
    for (int i = 1; i <= n; ++i) b.add(i, i % n + 1);
    b.add(2, n / 2);
    b.add((n + 4) / 2, n);
    for (int i = 2; i <= n / 2; ++i) b.add(i, n + 2 - i);
  }
  return std::move(b).build();
}

Graph gen_Fn(int n) {
  require_family_order(n);
  LabeledBuilder b(n);
  const int m = n - 1;
  for (int i = 1; i <= m; ++i) b.add(i, i % m + 1);
  for (int i = 1; i <= m; ++i) b.add(i, (i + 1) % m + 1);
  b.add(n, 1);
  b.add(n, 2);
  b.add(n, 3);
  return std::move(b).build();
}

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron() {
  GraphBuilder b(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) b.add(u, v);
  return std::move(b).build();
}

Graph cube_q3() {
  GraphBuilder b(8);
  for (int u = 0; u < 8; ++u)
    for (int d = 0; d < 3; ++d)
      if (!(u & (1 << d))) b.add(u, u | (1 << d));
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add(i, (i + 1) % 5);              // outer cycle
    b.add(5 + i, 5 + (i + 2) % 5);      // inner pentagram
    b.add(i, 5 + i);                    // spoke
  }
  return std::move(b).build();
}

Graph gen_family(FamilySpec spec) {
  switch (spec.family) {
    case Family::Gn: return gen_Gn(spec.n);
    case Family::Fn: return gen_Fn(spec.n);
    case Family::Prism: return prism();
    case Family::Octahedron: return octahedron();
    case Family::Q3: return cube_q3();
    case Family::Petersen: return petersen();
  }
  fail(ErrorCode::BadOrder, "unknown family");
}

bool SharpnessReport::all_hold() const {
  return std::all_of(claim_verdicts.begin(), claim_verdicts.end(),
                     [](const auto& kv) { return kv.second; });
}

namespace {

VertexSet labels(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int l : one_based) m |= bit(l - 1);
  return VertexSet(m);
}

std::vector<VertexSet> cut_sets(const SharpnessReport& r) {
  std::vector<VertexSet> out;
  for (const auto& c : r.minimum_cuts) out.push_back(c.cut);
  return out;
}

bool none_of_kind(const SharpnessReport& r, CutKind kind) {
  return std::none_of(r.minimum_cuts.begin(), r.minimum_cuts.end(), [&](const CutReport& c) {
    return kind == CutKind::Independent ? c.independent : c.foresty;
  });
}

}  // namespace

SharpnessReport evaluate_sharpness(FamilySpec spec) {
  const Graph g = gen_family(spec);
  const int n = g.order();
  SharpnessReport r;
  r.order = n;
  r.size = g.size();
  r.kappa = vertex_connectivity(g).kappa;
  r.minimum_cuts = enumerate_minimum_cuts(g);
  auto& claims = r.claim_verdicts;

  switch (spec.family) {
    case Family::Gn: {
      claims["size"] = r.size == 3 * n / 2 + 1;
      claims["kappa"] = r.kappa == 2;
      const std::vector<VertexSet> expected =
          n % 2 == 1 ? std::vector<VertexSet>{labels({1, (n + 1) / 2})}
                     : std::vector<VertexSet>{labels({2, n}), labels({n / 2, (n + 4) / 2})};
      auto sorted = expected;
      std::sort(sorted.begin(), sorted.end());
      claims["minimum_cuts"] = cut_sets(r) == sorted;
      claims["cuts_induce_edge"] = std::all_of(r.minimum_cuts.begin(), r.minimum_cuts.end(),
                                               [&](const CutReport& c) {
                                                 return induced_edge_count(g, c.cut.mask()) == 1;
                                               });
      claims["no_independent_minimum_cut"] = none_of_kind(r, CutKind::Independent);
      break;
    }
    case Family::Fn: {
      claims["size"] = r.size == 2 * n + 1;
      claims["kappa"] = r.kappa == 3;
      claims["minimum_cuts"] = cut_sets(r) == std::vector<VertexSet>{labels({1, 2, 3})};
      claims["cut_induces_triangle"] =
          r.minimum_cuts.size() == 1 && induced_edge_count(g, r.minimum_cuts[0].cut.mask()) == 3;
      claims["no_foresty_minimum_cut"] = none_of_kind(r, CutKind::Foresty);
      break;
    }
    case Family::Prism:
      claims["cubic"] = is_regular(g, 3);
      claims["no_independent_minimum_cut"] = none_of_kind(r, CutKind::Independent);
      break;
    case Family::Octahedron:
      claims["4_regular"] = is_regular(g, 4);
      claims["kappa"] = r.kappa == 4;
      claims["no_foresty_minimum_cut"] = none_of_kind(r, CutKind::Foresty);
      break;
    case Family::Q3:
    case Family::Petersen:
      claims["cubic"] = is_regular(g, 3);
      claims["kappa"] = r.kappa == 3;
      claims["has_independent_minimum_cut"] = !none_of_kind(r, CutKind::Independent);
      break;
  }
  return r;
}

SharpnessReport verify_sharpness(FamilySpec spec) {
  auto r = evaluate_sharpness(spec);
  for (const auto& [name, ok] : r.claim_verdicts)
    if (!ok) fail(ErrorCode::ClaimFailed, "claim '" + name + "' fails for " + std::string(to_string(spec.family)));
  return r;
}

}  // namespace sparsecut
