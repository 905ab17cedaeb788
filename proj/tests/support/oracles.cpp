#include "support/oracles.hpp"

#include <algorithm>
#include <random>

namespace oracle {

namespace {

std::vector<std::vector<int>> adjacency_lists(int n, const edge_set& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) adj[u].push_back(v);
  return adj;
}

void dfs(const std::vector<std::vector<int>>& adj, int v, std::vector<char>& seen) {
  seen[v] = 1;
  for (int w : adj[v])
    if (!seen[w]) dfs(adj, w, seen);
}

edge_set edges_of(const drdlab::digraph& g) {
  edge_set out;
  for (const drdlab::edge& e : g.edges()) out.push_back({e.from, e.to});
  return out;
}

bool sc_with_removed_vertices(const drdlab::digraph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> alive;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) alive.push_back(v);
  if (alive.size() <= 1) return true;
  edge_set edges;
  for (auto [u, v] : edges_of(g))
    if (!removed[u] && !removed[v]) edges.push_back({u, v});
  // relabel to 0..alive-1
  std::vector<int> id(n, -1);
  for (std::size_t i = 0; i < alive.size(); ++i) id[alive[i]] = static_cast<int>(i);
  edge_set relabeled;
  for (auto [u, v] : edges) relabeled.push_back({id[u], id[v]});
  return strongly_connected(static_cast<int>(alive.size()), relabeled);
}

}  // namespace

bool strongly_connected(int n, const edge_set& edges) {
  if (n <= 1) return true;
  auto fwd = adjacency_lists(n, edges);
  edge_set rev;
  for (auto [u, v] : edges) rev.push_back({v, u});
  auto bwd = adjacency_lists(n, rev);
  std::vector<char> a(n, 0), b(n, 0);
  dfs(fwd, 0, a);
  dfs(bwd, 0, b);
  for (int v = 0; v < n; ++v)
    if (!a[v] || !b[v]) return false;
  return true;
}

int min_st_cut_value(const drdlab::digraph& g, int s, int t) {
  const int n = g.order();
  edge_set edges = edges_of(g);
  int best = static_cast<int>(edges.size()) + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    if (!((mask >> s) & 1) || ((mask >> t) & 1)) continue;
    int crossing = 0;
    for (auto [u, v] : edges)
      if (((mask >> u) & 1) && !((mask >> v) & 1)) ++crossing;
    best = std::min(best, crossing);
  }
  return best;
}

std::set<edge_set> min_edge_cuts(const drdlab::digraph& g) {
  const int n = g.order();
  edge_set edges = edges_of(g);
  int best = static_cast<int>(edges.size()) + 1;
  std::set<edge_set> cuts;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << n); ++mask) {
    edge_set crossing;
    for (auto [u, v] : edges)
      if (((mask >> u) & 1) && !((mask >> v) & 1)) crossing.push_back({u, v});
    int size = static_cast<int>(crossing.size());
    if (size < best) {
      best = size;
      cuts.clear();
    }
    if (size == best) cuts.insert(std::move(crossing));
  }
  return cuts;
}

int edge_connectivity(const drdlab::digraph& g) {
  return static_cast<int>(min_edge_cuts(g).begin()->size());
}

std::set<std::vector<int>> min_vertex_cuts(const drdlab::digraph& g) {
  const int n = g.order();
  for (int size = 1; size <= n - 2; ++size) {
    std::set<std::vector<int>> cuts;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<char> removed(n, 0);
      for (int i : idx) removed[i] = 1;
      if (!sc_with_removed_vertices(g, removed)) cuts.insert(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!cuts.empty()) return cuts;
  }
  return {};
}

int vertex_connectivity(const drdlab::digraph& g) {
  auto cuts = min_vertex_cuts(g);
  return cuts.empty() ? -1 : static_cast<int>(cuts.begin()->size());
}

long long count_walks(const drdlab::digraph& g, int u, int v, int len) {
  if (len == 0) return u == v ? 1 : 0;
  long long total = 0;
  drdlab::for_each_bit(g.out_bits(u), [&](int w) { total += count_walks(g, w, v, len - 1); });
  return total;
}

drdlab::digraph relabel(const drdlab::digraph& g, std::uint64_t seed) {
  const int n = g.order();
  std::mt19937_64 eng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[eng() % (i + 1)]);
  std::vector<drdlab::edge> edges;
  for (const drdlab::edge& e : g.edges()) edges.push_back({perm[e.from], perm[e.to]});
  return drdlab::digraph::from_edges(n, edges);
}

}  // namespace oracle
