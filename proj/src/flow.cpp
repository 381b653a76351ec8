#include "sparsecut/flow.hpp"

#include <array>
#include <cstdint>

#include "sparsecut/error.hpp"

namespace sparsecut {

namespace {

// Node numbering: v_in = v, v_out = kMaxOrder + v.
constexpr int kOut = kMaxOrder;
constexpr int kSource = -1;

class SplitFlow {
 public:
  SplitFlow(const Graph& g, Mask sources, Mask sinks, Mask removed)
      : g_(g), alive_(g.vertices() & ~removed), sources_(sources & alive_), sinks_(sinks & alive_) {
    pred_.fill(-1);
  }

  // One BFS in the residual graph; augments and returns true on success.
  bool augment() {
    std::array<std::int16_t, 2 * kMaxOrder> parent;
    std::array<std::int16_t, 2 * kMaxOrder> queue;
    int head = 0;
    int tail = 0;
    seen_in_ = 0;
    seen_out_ = 0;

    for (int a : Bits{sources_ & ~used_}) {
      seen_in_ |= bit(a);
      parent[a] = kSource;
      queue[tail++] = static_cast<std::int16_t>(a);
    }

    int end = -1;
    while (head < tail && end < 0) {
      const int node = queue[head++];
      if (node < kOut) {
        const int v = node;
        if (!(used_ & bit(v))) {
          if (sinks_ & bit(v)) {
            end = v;
            break;
          }
          if (!(seen_out_ & bit(v))) {
            seen_out_ |= bit(v);
            parent[kOut + v] = static_cast<std::int16_t>(v);
            queue[tail++] = static_cast<std::int16_t>(kOut + v);
          }
        } else if (pred_[v] >= 0) {
          // cancel the flow on edge pred(v) -> v
          const int u = pred_[v];
          if (!(seen_out_ & bit(u))) {
            seen_out_ |= bit(u);
            parent[kOut + u] = static_cast<std::int16_t>(v);
            queue[tail++] = static_cast<std::int16_t>(kOut + u);
          }
        }
      } else {
        const int u = node - kOut;
        if (!(sinks_ & bit(u))) {
          for (int w : Bits{g_.row(u) & alive_ & ~sources_ & ~seen_in_}) {
            seen_in_ |= bit(w);
            parent[w] = static_cast<std::int16_t>(node);
            queue[tail++] = static_cast<std::int16_t>(w);
          }
        }
        if ((used_ & bit(u)) && !(seen_in_ & bit(u))) {
          seen_in_ |= bit(u);
          parent[u] = static_cast<std::int16_t>(node);
          queue[tail++] = static_cast<std::int16_t>(u);
        }
      }
    }
    if (end < 0) return false;

    // The sink arc and the vertex arc of `end` become saturated.
    used_ |= bit(end);
    int cur = end;
    while (true) {
      const int p = parent[cur];
      if (p == kSource) break;
      if (cur < kOut) {
        const int w = cur;
        if (p >= kOut) {
          const int u = p - kOut;
          if (u == w) {
            used_ &= ~bit(w);  // reverse vertex arc u_out -> u_in
          } else {
            flow_out_[u] |= bit(w);  // forward edge arc
          }
        }
      } else {
        const int u = cur - kOut;
        if (p == u) {
          used_ |= bit(u);  // forward vertex arc
        } else {
          flow_out_[u] &= ~bit(p);  // reverse edge arc w_in -> u_out
        }
      }
      cur = p;
    }
    rebuild_pred();
    ++value_;
    return true;
  }

  Mask separator() const {
    const Mask unreached_sources = sources_ & used_ & ~seen_in_;
    const Mask split = seen_in_ & ~seen_out_ & alive_;
    return unreached_sources | (split & ~sinks_) | (split & sinks_ & used_);
  }

  std::vector<std::vector<int>> paths() const {
    std::vector<std::vector<int>> out;
    for (int a : Bits{sources_ & used_}) {
      std::vector<int> p{a};
      int cur = a;
      while (!(sinks_ & bit(cur))) {
        const Mask next = flow_out_[cur];
        if (std::popcount(next) != 1)
          fail(ErrorCode::AlgorithmBug, "flow decomposition found a branching vertex");
        cur = std::countr_zero(next);
        p.push_back(cur);
        if (static_cast<int>(p.size()) > g_.order())
          fail(ErrorCode::AlgorithmBug, "flow decomposition did not terminate");
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  int value() const { return value_; }

 private:
  void rebuild_pred() {
    pred_.fill(-1);
    for (int u : Bits{used_})
      for (int w : Bits{flow_out_[u]}) pred_[w] = static_cast<std::int8_t>(u);
  }

  const Graph& g_;
  Mask alive_;
  Mask sources_;
  Mask sinks_;
  Mask used_ = 0;
  Mask seen_in_ = 0;
  Mask seen_out_ = 0;
  int value_ = 0;
  std::array<Mask, kMaxOrder> flow_out_{};
  std::array<std::int8_t, kMaxOrder> pred_{};
};

}  // namespace

DisjointPathFlow max_disjoint_paths(const Graph& g, Mask sources, Mask sinks, Mask removed,
                                    int limit, bool want_paths) {
  SplitFlow flow(g, sources, sinks, removed);
  DisjointPathFlow result;
  while (limit < 0 || flow.value() < limit) {
    if (!flow.augment()) {
      result.separator = flow.separator();
      if (std::popcount(result.separator) != flow.value())
        fail(ErrorCode::AlgorithmBug, "separator size differs from flow value");
      break;
    }
  }
  result.value = flow.value();
  result.truncated = limit >= 0 && result.value >= limit;
  if (result.truncated) result.separator = 0;
  if (want_paths) result.paths = flow.paths();
  return result;
}

DisjointPathFlow local_connectivity(const Graph& g, int s, int t, int limit) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t || g.adjacent(s, t))
    fail(ErrorCode::PreconditionFailed, "local connectivity needs distinct nonadjacent vertices");
  return max_disjoint_paths(g, g.row(s), g.row(t), bit(s) | bit(t), limit);
}

}  // namespace sparsecut
