#pragma once

#include <array>

namespace sparsecut {

inline bool disconnects(const Graph& g, Mask s) {
  const Mask rest = g.vertices() & ~s;
  return rest != 0 && !is_connected_on(g, rest);
}

// Walks all k-subsets of the vertex set in lexicographic order.
template <typename Fn>
void for_each_cut_of_size(const Graph& g, int kappa, Fn&& fn) {
  const int n = g.order();
  if (kappa < 0 || kappa >= n) return;
  if (kappa == 0) {
    if (disconnects(g, 0)) fn(Mask{0});
    return;
  }
  std::array<int, kMaxOrder> idx{};
  for (int i = 0; i < kappa; ++i) idx[i] = i;
  while (true) {
    Mask s = 0;
    for (int i = 0; i < kappa; ++i) s |= bit(idx[i]);
    if (disconnects(g, s) && !fn(s)) return;
    int i = kappa - 1;
    while (i >= 0 && idx[i] == n - kappa + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < kappa; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sparsecut
