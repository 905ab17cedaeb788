#include "drdlab/connectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace drdlab {

namespace {

struct flow_network {
  struct arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc in adj[to]
  };
  std::vector<std::vector<arc>> adj;
  std::vector<int> level, iter;

  explicit flow_network(int n) : adj(n), level(n), iter(n) {}

  void add_arc(int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const arc& a : adj[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
      arc& a = adj[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          adj[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (int f = dfs(s, t, 1 << 30)) flow += f;
    }
    return flow;
  }

  // Vertices reachable from s along positive-residual arcs.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const arc& a : adj[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
    }
    return seen;
  }
};

flow_network edge_network(const digraph& g) {
  flow_network net(g.order());
  for (const edge& e : g.edges()) net.add_arc(e.from, e.to, 1);
  return net;
}

std::vector<edge> crossing_edges(const digraph& g, const std::vector<char>& in_a) {
  std::vector<edge> out;
  for (const edge& e : g.edges())
    if (in_a[e.from] && !in_a[e.to]) out.push_back(e);
  return out;
}

bool strongly_connected_without_edges(const digraph& g, const std::set<std::pair<int, int>>& removed) {
  const int n = g.order();
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        bool has = forward ? g.has_edge(u, v) : g.has_edge(v, u);
        if (!has || seen[v]) continue;
        if (forward ? removed.count({u, v}) : removed.count({v, u})) continue;
        seen[v] = 1;
        ++cnt;
        q.push(v);
      }
    }
    return cnt == n;
  };
  return reach(true) && reach(false);
}

bool strongly_connected_without_vertices(const digraph& g, const std::vector<char>& removed) {
  const int n = g.order();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (removed[v] || seen[v]) continue;
        if (!(forward ? g.has_edge(u, v) : g.has_edge(v, u))) continue;
        seen[v] = 1;
        ++cnt;
        q.push(v);
      }
    }
    return cnt == alive;
  };
  return reach(true) && reach(false);
}

// Tarjan condensation of the positive-residual digraph. Component ids come
// out in reverse topological order: every residual arc goes from a component
// with a higher id to one with a lower or equal id.
struct condensation {
  int count = 0;
  std::vector<int> comp;
  std::vector<std::vector<int>> succ;  // deduplicated successors per component
};

condensation condense_residual(const flow_network& net) {
  const int n = static_cast<int>(net.adj.size());
  condensation c;
  c.comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stk;
  std::vector<char> on_stack(n, 0);
  int counter = 0;

  // iterative Tarjan
  struct frame {
    int v;
    std::size_t ai;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    stk.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      frame& f = call.back();
      int v = f.v;
      bool descended = false;
      while (f.ai < net.adj[v].size()) {
        const auto& a = net.adj[v][f.ai];
        ++f.ai;
        if (a.cap <= 0) continue;
        int w = a.to;
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          on_stack[w] = 0;
          c.comp[w] = c.count;
          if (w == v) break;
        }
        ++c.count;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  c.succ.assign(c.count, {});
  std::set<std::pair<int, int>> seen;
  for (int u = 0; u < n; ++u)
    for (const auto& a : net.adj[u])
      if (a.cap > 0 && c.comp[u] != c.comp[a.to] && seen.insert({c.comp[u], c.comp[a.to]}).second)
        c.succ[c.comp[u]].push_back(c.comp[a.to]);
  return c;
}

// All successor-closed component sets containing `mandatory`, avoiding every
// component that reaches scc(t). Calls sink(vertex-membership flags).
template <class Sink>
void enumerate_closed_sets(const condensation& c, int n_vertices, int s_comp, int t_comp,
                           Sink&& sink) {
  const int m = c.count;
  std::vector<char> mandatory(m, 0), forbidden(m, 0);

  // descendants of scc(s) are mandatory
  {
    std::vector<int> q{s_comp};
    mandatory[s_comp] = 1;
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      for (int y : c.succ[x])
        if (!mandatory[y]) {
          mandatory[y] = 1;
          q.push_back(y);
        }
    }
  }
  // ancestors of scc(t), and scc(t) itself, can never join
  {
    std::vector<std::vector<int>> pred(m);
    for (int x = 0; x < m; ++x)
      for (int y : c.succ[x]) pred[y].push_back(x);
    std::vector<int> q{t_comp};
    forbidden[t_comp] = 1;
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      for (int y : pred[x])
        if (!forbidden[y]) {
          forbidden[y] = 1;
          q.push_back(y);
        }
    }
  }

  std::vector<int> free_comps;
  for (int x = 0; x < m; ++x)
    if (!mandatory[x] && !forbidden[x]) free_comps.push_back(x);
  // Tarjan ids already satisfy: successors have lower ids. Adding components
  // in ascending id order therefore sees each closed set exactly once.
  std::sort(free_comps.begin(), free_comps.end());

  std::vector<char> chosen(m, 0);
  auto emit = [&]() {
    std::vector<char> in_a(static_cast<std::size_t>(n_vertices), 0);
    for (int v = 0; v < n_vertices; ++v)
      if (mandatory[c.comp[v]] || chosen[c.comp[v]]) in_a[v] = 1;
    sink(in_a);
  };
  auto addable = [&](int x) {
    for (int y : c.succ[x])
      if (!mandatory[y] && !chosen[y]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    emit();
    for (std::size_t i = start; i < free_comps.size(); ++i) {
      int x = free_comps[i];
      if (!addable(x)) continue;
      chosen[x] = 1;
      self(self, i + 1);
      chosen[x] = 0;
    }
  };
  rec(rec, 0);
}

void require_connected(const digraph& g, const char* op) {
  if (!g.is_strongly_connected()) {
    auto [a, b] = g.unreachable_pair();
    fail(errc::not_strongly_connected, std::string(op) + ": digraph is not strongly connected, no path (" +
                                           std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

std::string to_string(const cut_class& c) {
  std::string s;
  switch (c.tag) {
    case cut_tag::out_star: s = "out-star(" + std::to_string(c.vertex) + ")"; break;
    case cut_tag::in_star: s = "in-star(" + std::to_string(c.vertex) + ")"; break;
    case cut_tag::out_neighborhood: s = "out-neighborhood(" + std::to_string(c.vertex) + ")"; break;
    case cut_tag::in_neighborhood: s = "in-neighborhood(" + std::to_string(c.vertex) + ")"; break;
    case cut_tag::non_trivial: return "non-trivial";
  }
  if (c.both) s += "+both";
  return s;
}

max_flow_result max_flow(const digraph& g, int s, int t) {
  require(s != t, errc::precondition, "max_flow: source equals sink");
  const int n = g.order();
  require(s >= 0 && s < n && t >= 0 && t < n, errc::precondition, "max_flow: vertex out of range");
  flow_network net = edge_network(g);
  max_flow_result res;
  res.value = net.run(s, t);
  std::vector<char> in_a = net.residual_reachable(s);
  for (int v = 0; v < n; ++v)
    if (in_a[v]) res.side_a.push_back(v);
  res.crossing = crossing_edges(g, in_a);
  return res;
}

int edge_connectivity(const digraph& g) {
  require_connected(g, "edge_connectivity");
  require(g.order() >= 2, errc::precondition, "edge_connectivity: need n >= 2");
  int best = g.edge_count();
  for (int u = 1; u < g.order(); ++u) {
    best = std::min(best, max_flow(g, 0, u).value);
    best = std::min(best, max_flow(g, u, 0).value);
  }
  return best;
}

std::vector<edge_cut> enumerate_min_edge_cuts(const digraph& g) {
  require_connected(g, "enumerate_min_edge_cuts");
  require(g.order() >= 2, errc::precondition, "enumerate_min_edge_cuts: need n >= 2");
  const int n = g.order();
  const int c = edge_connectivity(g);

  std::map<std::vector<edge>, std::set<std::vector<int>>> cuts;
  auto run_pair = [&](int s, int t) {
    flow_network net = edge_network(g);
    if (net.run(s, t) != c) return;
    condensation cond = condense_residual(net);
    enumerate_closed_sets(cond, n, cond.comp[s], cond.comp[t], [&](const std::vector<char>& in_a) {
      std::vector<edge> cross = crossing_edges(g, in_a);
      require(static_cast<int>(cross.size()) == c, errc::consistency,
              "closed-set enumeration produced a non-minimum cut");
      std::vector<int> side;
      for (int v = 0; v < n; ++v)
        if (in_a[v]) side.push_back(v);
      cuts[std::move(cross)].insert(std::move(side));
    });
  };
  for (int u = 1; u < n; ++u) {
    run_pair(0, u);
    run_pair(u, 0);
  }

  std::vector<edge_cut> out;
  for (auto& [cross, sides] : cuts) {
    // canonical side: vertices that cannot reach any head of the cut once the
    // cut edges are removed
    std::set<std::pair<int, int>> removed;
    for (const edge& e : cross) removed.insert({e.from, e.to});
    require(!strongly_connected_without_edges(g, removed), errc::consistency,
            "enumerated cut does not disconnect the digraph");
    std::vector<char> reaches_head(n, 0);
    {
      std::queue<int> q;
      for (const edge& e : cross)
        if (!reaches_head[e.to]) {
          reaches_head[e.to] = 1;
          q.push(e.to);
        }
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < n; ++u)
          if (!reaches_head[u] && g.has_edge(u, v) && !removed.count({u, v})) {
            reaches_head[u] = 1;
            q.push(u);
          }
      }
    }
    edge_cut cut;
    cut.crossing = cross;
    cut.size = static_cast<int>(cross.size());
    for (int v = 0; v < n; ++v)
      if (!reaches_head[v]) cut.side_a.push_back(v);
    cut.generating_sides.assign(sides.begin(), sides.end());
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(),
            [](const edge_cut& a, const edge_cut& b) { return a.crossing < b.crossing; });
  return out;
}

cut_class classify_edge_cut(const digraph& g, const edge_cut& cut) {
  require(!cut.crossing.empty(), errc::invalid_argument, "classify_edge_cut: empty cut");
  std::set<std::pair<int, int>> removed;
  for (const edge& e : cut.crossing) {
    require(g.has_edge(e.from, e.to), errc::invalid_argument,
            "classify_edge_cut: cut contains a non-edge");
    require(removed.insert({e.from, e.to}).second, errc::invalid_argument,
            "classify_edge_cut: duplicate edge in cut");
  }
  require(!strongly_connected_without_edges(g, removed), errc::invalid_argument,
          "classify_edge_cut: edge set does not disconnect the digraph");

  bool same_tail = true, same_head = true;
  for (const edge& e : cut.crossing) {
    same_tail = same_tail && e.from == cut.crossing[0].from;
    same_head = same_head && e.to == cut.crossing[0].to;
  }
  int tail = cut.crossing[0].from, head = cut.crossing[0].to;
  bool out_star = same_tail && static_cast<int>(cut.crossing.size()) == g.out_degree(tail);
  bool in_star = same_head && static_cast<int>(cut.crossing.size()) == g.in_degree(head);
  if (out_star) return {cut_tag::out_star, tail, in_star};
  if (in_star) return {cut_tag::in_star, head, false};
  return {cut_tag::non_trivial, -1, false};
}

bool check_cut_balance(const digraph& g, std::span<const int> side_a) {
  require(g.regular_degree().has_value(), errc::precondition,
          "check_cut_balance: digraph is not regular");
  const int n = g.order();
  std::vector<char> in_a(n, 0);
  int cnt = 0;
  for (int v : side_a) {
    require(v >= 0 && v < n, errc::precondition, "check_cut_balance: vertex out of range");
    if (!in_a[v]) ++cnt;
    in_a[v] = 1;
  }
  require(cnt > 0 && cnt < n, errc::precondition, "check_cut_balance: side must be a nonempty proper subset");
  int ab = 0, ba = 0;
  for (const edge& e : g.edges()) {
    if (in_a[e.from] && !in_a[e.to]) ++ab;
    if (!in_a[e.from] && in_a[e.to]) ++ba;
  }
  return ab == ba;
}

namespace {

// Vertex-splitting network: v_in = 2v, v_out = 2v+1; split arcs have
// capacity 1 and real edges capacity n (effectively infinite).
flow_network split_network(const digraph& g) {
  const int n = g.order();
  flow_network net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (const edge& e : g.edges()) net.add_arc(2 * e.from + 1, 2 * e.to, n);
  return net;
}

void require_separable(const digraph& g, const char* op) {
  require_connected(g, op);
  const int n = g.order();
  require(g.edge_count() < n * (n - 1), errc::precondition,
          std::string(op) + ": complete digraph, no vertex cut exists");
}

}  // namespace

int vertex_connectivity(const digraph& g) {
  require_separable(g, "vertex_connectivity");
  const int n = g.order();
  int best = n;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || g.has_edge(s, t)) continue;
      flow_network net = split_network(g);
      best = std::min(best, net.run(2 * s + 1, 2 * t));
    }
  return best;
}

std::vector<vertex_cut> enumerate_min_vertex_cuts(const digraph& g) {
  require_separable(g, "enumerate_min_vertex_cuts");
  const int n = g.order();
  const int kappa = vertex_connectivity(g);

  std::set<std::vector<int>> cuts;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || g.has_edge(s, t)) continue;
      flow_network net = split_network(g);
      if (net.run(2 * s + 1, 2 * t) != kappa) continue;
      condensation cond = condense_residual(net);
      enumerate_closed_sets(cond, 2 * n, cond.comp[2 * s + 1], cond.comp[2 * t],
                            [&](const std::vector<char>& in_a) {
                              std::vector<int> cut;
                              for (int v = 0; v < n; ++v)
                                if (in_a[2 * v] && !in_a[2 * v + 1]) cut.push_back(v);
                              if (static_cast<int>(cut.size()) == kappa) cuts.insert(std::move(cut));
                            });
    }

  std::vector<vertex_cut> out;
  for (const auto& verts : cuts) {
    std::vector<char> removed(n, 0);
    for (int v : verts) removed[v] = 1;
    require(!strongly_connected_without_vertices(g, removed), errc::consistency,
            "enumerated vertex set does not disconnect the digraph");
    out.push_back({verts, static_cast<int>(verts.size())});
  }
  return out;
}

cut_class classify_vertex_cut(const digraph& g, const vertex_cut& cut) {
  const int n = g.order();
  require(!cut.vertices.empty(), errc::invalid_argument, "classify_vertex_cut: empty cut");
  std::vector<char> removed(n, 0);
  for (int v : cut.vertices) {
    require(v >= 0 && v < n, errc::invalid_argument, "classify_vertex_cut: vertex out of range");
    require(!removed[v], errc::invalid_argument, "classify_vertex_cut: duplicate vertex in cut");
    removed[v] = 1;
  }
  require(n - static_cast<int>(cut.vertices.size()) >= 2, errc::invalid_argument,
          "classify_vertex_cut: fewer than two vertices remain");
  require(!strongly_connected_without_vertices(g, removed), errc::invalid_argument,
          "classify_vertex_cut: vertex set does not disconnect the digraph");

  std::vector<int> sorted = cut.vertices;
  std::sort(sorted.begin(), sorted.end());
  auto matches = [&](int v, direction dir) {
    std::vector<int> nb;
    if (dir == direction::out)
      for_each_bit(g.out_bits(v), [&](int w) { nb.push_back(w); });
    else
      for_each_bit(g.in_bits(v), [&](int w) { nb.push_back(w); });
    return nb == sorted;
  };
  int out_v = -1, in_v = -1;
  for (int v = 0; v < n && out_v < 0; ++v)
    if (!removed[v] && matches(v, direction::out)) out_v = v;
  for (int v = 0; v < n && in_v < 0; ++v)
    if (!removed[v] && matches(v, direction::in)) in_v = v;
  if (out_v >= 0) return {cut_tag::out_neighborhood, out_v, in_v >= 0};
  if (in_v >= 0) return {cut_tag::in_neighborhood, in_v, false};
  return {cut_tag::non_trivial, -1, false};
}

}  // namespace drdlab
