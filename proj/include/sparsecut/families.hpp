#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecut/connectivity.hpp"
#include "sparsecut/graph.hpp"

namespace sparsecut {

enum class Family { Gn, Fn, Prism, Octahedron, Q3, Petersen };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);  // case-insensitive

struct FamilySpec {
  Family family = Family::Gn;
  int n = 0;  // ignored for the fixed fixtures
};

// Vertex ids 0..n-1 stand for the labels v_1..v_n.
//
//   G_n, n odd : cycle v1..v_{n-1}; v1v_{(n+1)/2}, v1v_n, v_{(n+1)/2}v_n;
//                v_i v_{n+1-i} for 2 <= i <= (n-1)/2.
//   G_n, n even: cycle v1..v_n; v2v_{n/2}, v_{(n+4)/2}v_n;
//                v_i v_{n+2-i} for 2 <= i <= n/2.
//   F_n        : cycle v1..v_{n-1} plus all its 2-chords, then v_n joined to
//                v1, v2, v3.
//
// G_n and F_n need n >= 7 (BadOrder otherwise). Any repeated edge while
// building is reported as AlgorithmBug.
Graph gen_family(FamilySpec spec);

Graph gen_Gn(int n);
Graph gen_Fn(int n);
Graph prism();
Graph octahedron();
Graph cube_q3();
Graph petersen();

struct SharpnessReport {
  int order = 0;
  int size = 0;
  int kappa = 0;
  std::vector<CutReport> minimum_cuts;
  std::map<std::string, bool> claim_verdicts;

  bool all_hold() const;
};

// Checks the family's stated claims against a full minimum-cut enumeration.
SharpnessReport evaluate_sharpness(FamilySpec spec);

// As evaluate_sharpness, raising ClaimFailed naming the first false claim.
SharpnessReport verify_sharpness(FamilySpec spec);

}  // namespace sparsecut
