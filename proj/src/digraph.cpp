#include "drdlab/digraph.hpp"

#include <algorithm>
#include <string>

namespace drdlab {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Single-source BFS over bit rows; fills dist[v] with -1 for unreachable.
void bfs(const bit_matrix& adj, int src, std::vector<int>& dist) {
  const int n = adj.dimension();
  const int wpr = adj.words_per_row();
  dist.assign(n, -1);
  dist[src] = 0;
  std::vector<word> visited(wpr, 0), frontier(wpr, 0), next(wpr, 0);
  visited[src / 64] |= word(1) << (src % 64);
  frontier = visited;
  int d = 0;
  while (true) {
    std::fill(next.begin(), next.end(), word(0));
    for_each_bit(std::span<const word>(frontier), [&](int u) {
      auto row = adj.row(u);
      for (int i = 0; i < wpr; ++i) next[i] |= row[i];
    });
    for (int i = 0; i < wpr; ++i) next[i] &= ~visited[i];
    bool any = false;
    for (int i = 0; i < wpr; ++i)
      if (next[i]) any = true;
    if (!any) break;
    ++d;
    for_each_bit(std::span<const word>(next), [&](int v) { dist[v] = d; });
    for (int i = 0; i < wpr; ++i) visited[i] |= next[i];
    frontier = next;
  }
}

}  // namespace

digraph digraph::from_edges(int n, std::span<const edge> edges) {
  require(n >= 1, errc::invalid_argument, "vertex count must be >= 1, got " + std::to_string(n));
  bit_matrix adj(n);
  for (const edge& e : edges) {
    require(e.from >= 0 && e.from < n && e.to >= 0 && e.to < n, errc::invalid_argument,
            "edge " + pair_str(e.from, e.to) + " out of range for n=" + std::to_string(n));
    require(e.from != e.to, errc::invalid_argument, "loop " + pair_str(e.from, e.to));
    require(!adj.get(e.from, e.to), errc::invalid_argument,
            "duplicate edge " + pair_str(e.from, e.to));
    adj.set(e.from, e.to);
  }
  return digraph(std::move(adj));
}

digraph digraph::from_edges(int n, std::initializer_list<edge> edges) {
  return from_edges(n, std::span<const edge>(edges.begin(), edges.size()));
}

digraph digraph::from_adjacency(bit_matrix adj) {
  const int n = adj.dimension();
  require(n >= 1, errc::invalid_argument, "vertex count must be >= 1");
  for (int u = 0; u < n; ++u)
    require(!adj.get(u, u), errc::invalid_argument, "loop " + pair_str(u, u));
  return digraph(std::move(adj));
}

digraph::digraph(bit_matrix adj) : n_(adj.dimension()), adj_(std::move(adj)), radj_(n_) {
  out_deg_.resize(n_);
  in_deg_.resize(n_);
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_.row(u), [&](int v) {
      radj_.set(v, u);
      ++out_deg_[u];
      ++in_deg_[v];
      edge_count_++;
      if (adj_.get(v, u) && v > u) has_digon_ = true;
    });
  }

  undirected_ = (adj_ == radj_);
  regular_degree_ = out_deg_.empty() ? std::nullopt : std::optional<int>(out_deg_[0]);
  for (int u = 0; u < n_ && regular_degree_; ++u)
    if (out_deg_[u] != *regular_degree_ || in_deg_[u] != *regular_degree_)
      regular_degree_ = std::nullopt;

  // Strong connectivity: forward and backward reachability from vertex 0.
  std::vector<int> fwd, bwd;
  bfs(adj_, 0, fwd);
  bfs(radj_, 0, bwd);
  strongly_connected_ = true;
  for (int v = 0; v < n_; ++v) {
    if (fwd[v] < 0) {
      strongly_connected_ = false;
      unreachable_ = {0, v};
      break;
    }
    if (bwd[v] < 0) {
      strongly_connected_ = false;
      unreachable_ = {v, 0};
      break;
    }
  }
  if (!strongly_connected_) return;

  std::vector<int> d(static_cast<std::size_t>(n_) * n_);
  std::vector<int> row;
  for (int u = 0; u < n_; ++u) {
    bfs(adj_, u, row);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::size_t>(u) * n_);
  }
  dist_ = distance_matrix(n_, std::move(d));

  diameter_ = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v) diameter_ = std::max(diameter_, dist_.at(u, v));

  if (n_ >= 2) {
    girth_ = n_ + 1;
    for (int u = 0; u < n_; ++u)
      for_each_bit(adj_.row(u), [&](int w) { girth_ = std::min(girth_, 1 + dist_.at(w, u)); });
  }
}

const distance_matrix& digraph::distances() const {
  if (!strongly_connected_)
    fail(errc::not_strongly_connected,
         "digraph is not strongly connected: no path " + pair_str(unreachable_.first, unreachable_.second));
  return dist_;
}

int digraph::diameter() const {
  distances();
  return diameter_;
}

int digraph::girth() const {
  distances();
  require(n_ >= 2, errc::precondition, "girth is undefined for a single-vertex digraph");
  return girth_;
}

std::vector<int> digraph::shell(int x, int k, direction dir) const {
  const distance_matrix& d = distances();
  require(x >= 0 && x < n_, errc::precondition, "shell: vertex out of range");
  require(k >= 0 && k <= diameter_, errc::precondition,
          "shell: distance " + std::to_string(k) + " outside 0..diameter");
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    int dv = dir == direction::out ? d.at(x, v) : d.at(v, x);
    if (dv == k) out.push_back(v);
  }
  return out;
}

std::vector<word> digraph::shell_bits(int x, int k, direction dir) const {
  std::vector<word> mask(adj_.words_per_row(), 0);
  for (int v : shell(x, k, dir)) mask[v / 64] |= word(1) << (v % 64);
  return mask;
}

std::vector<edge> digraph::edges() const {
  std::vector<edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) for_each_bit(adj_.row(u), [&](int v) { out.push_back({u, v}); });
  return out;  // already lexicographically sorted by construction
}

digraph digraph::reversed() const {
  bit_matrix t(n_);
  for (int u = 0; u < n_; ++u) for_each_bit(adj_.row(u), [&](int v) { t.set(v, u); });
  return digraph(std::move(t));
}

}  // namespace drdlab
