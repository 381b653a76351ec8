#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sparsecut::testing {

AdjList adjacency_list(const Graph& g) {
  AdjList adj(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u].push_back(v);
  return adj;
}

bool connected_without(const AdjList& adj, const std::vector<bool>& removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

namespace {

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int brute_force_kappa(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_list(g);
  for (int k = 0; k <= n - 2; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
      std::vector<bool> removed(n, false);
      for (int v : s) removed[v] = true;
      if (!connected_without(adj, removed)) found = true;
      return !found;
    });
    if (found) return k;
  }
  return n - 1;
}

std::vector<std::vector<int>> brute_force_cuts(const Graph& g, int k) {
  const int n = g.order();
  const auto adj = adjacency_list(g);
  std::vector<std::vector<int>> out;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    std::vector<bool> removed(n, false);
    for (int v : s) removed[v] = true;
    if (!connected_without(adj, removed)) out.push_back(s);
    return true;
  });
  return out;
}

int brute_force_local_separator(const Graph& g, int s, int t) {
  const int n = g.order();
  const auto adj = adjacency_list(g);
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != s && v != t) others.push_back(v);
  auto separates = [&](const std::vector<bool>& removed) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return !seen[t];
  };
  const int m = static_cast<int>(others.size());
  for (int k = 0; k <= m; ++k) {
    bool found = false;
    for_each_subset(m, k, [&](const std::vector<int>& idx) {
      std::vector<bool> removed(n, false);
      for (int i : idx) removed[others[i]] = true;
      if (separates(removed)) found = true;
      return !found;
    });
    if (found) return k;
  }
  return -1;
}

bool brute_force_independent(const Graph& g, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) return false;
  return true;
}

bool brute_force_forest(const Graph& g, const std::vector<int>& s) {
  // union-find: an induced edge joining two already connected vertices closes a cycle
  std::vector<int> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) {
        int ra = find(static_cast<int>(a));
        int rb = find(static_cast<int>(b));
        if (ra == rb) return false;
        parent[ra] = rb;
      }
  return true;
}

Graph random_graph(std::mt19937_64& rng, int order, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(order, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, int order, int extra_edges) {
  std::vector<Edge> edges;
  for (int v = 1; v < order; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  std::uniform_int_distribution<int> any(0, order - 1);
  for (int i = 0; i < extra_edges; ++i) {
    int u = any(rng);
    int v = any(rng);
    if (u != v) edges.push_back({u, v});
  }
  return Graph::from_edges(order, edges);
}

}  // namespace sparsecut::testing
