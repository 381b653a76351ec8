#include "sparsecut/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "sparsecut/error.hpp"
#include "sparsecut/io.hpp"

namespace sparsecut {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    // Column j holds j bits; all ones is an upper bound for every column.
    for (int j = 0; j < n_; ++j) best_[j] = (1u << j) - 1;
  }

  void run() { place(0, 0); }

  std::string graph6() const {
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | static_cast<int>((best_[j] >> (j - 1 - i)) & 1u);
        if (++filled == 6) {
          out.push_back(static_cast<char>(acc + 63));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
  }

 private:
  // Column value of candidate c at position j: bit (j-1-i) set iff the vertex
  // at position i is adjacent to c, so the first graph6 bit is the most
  // significant.
  unsigned column(int j, int c) const {
    unsigned val = 0;
    for (int i = 0; i < j; ++i) val = (val << 1) | (g_.adjacent(perm_[i], c) ? 1u : 0u);
    return val;
  }

  // -1, 0, 1 comparing cur_[1..j] with best_[1..j].
  int compare_prefix(int j) const {
    for (int k = 1; k <= j; ++k) {
      if (cur_[k] != best_[k]) return cur_[k] < best_[k] ? -1 : 1;
    }
    return 0;
  }

  void place(int j, Mask used) {
    if (j == n_) {
      if (compare_prefix(n_ - 1) <= 0) best_ = cur_;
      return;
    }
    // Try candidates in increasing column order so good bounds come early.
    std::array<std::pair<unsigned, int>, kMaxCanonicalOrder> cand{};
    int count = 0;
    for (int c = 0; c < n_; ++c)
      if (!(used & bit(c))) cand[count++] = {column(j, c), c};
    std::sort(cand.begin(), cand.begin() + count);
    for (int k = 0; k < count; ++k) {
      perm_[j] = cand[k].second;
      cur_[j] = cand[k].first;
      if (compare_prefix(j) > 0) continue;
      place(j + 1, used | bit(cand[k].second));
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxCanonicalOrder> perm_{};
  std::array<unsigned, kMaxCanonicalOrder> cur_{};
  std::array<unsigned, kMaxCanonicalOrder> best_{};
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    fail(ErrorCode::TooLarge, "canonical form limited to order " + std::to_string(kMaxCanonicalOrder));
  if (g.order() <= 1) return {to_graph6(g)};
  CanonicalSearch search(g);
  search.run();
  return {search.graph6()};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sparsecut
