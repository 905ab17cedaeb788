#include "drdlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace drdlab {

digraph directed_cycle(int n) {
  require(n >= 2, errc::range, "directed_cycle: need n >= 2, got " + std::to_string(n));
  std::vector<edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return digraph::from_edges(n, e);
}

digraph undirected_cycle(int n) {
  require(n >= 3, errc::range, "undirected_cycle: need n >= 3, got " + std::to_string(n));
  std::vector<edge> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({(i + 1) % n, i});
  }
  return digraph::from_edges(n, e);
}

digraph block_cycle(int t, int rho) {
  require(t >= 2, errc::range, "block_cycle: need t >= 2, got " + std::to_string(t));
  require(rho >= 1, errc::range, "block_cycle: need rho >= 1, got " + std::to_string(rho));
  const int n = t * rho;
  std::vector<edge> e;
  for (int b = 0; b < t; ++b) {
    int nb = (b + 1) % t;
    for (int i = 0; i < rho; ++i)
      for (int j = 0; j < rho; ++j) e.push_back({b * rho + i, nb * rho + j});
  }
  return digraph::from_edges(n, e);
}

digraph damerell_lift(const digraph& base, int m) {
  require(m >= 2, errc::range, "damerell_lift: need m >= 2, got " + std::to_string(m));
  const int nb = base.order();
  std::vector<edge> e;
  for (const edge& be : base.edges())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) e.push_back({be.from * m + i, be.to * m + j});
  return digraph::from_edges(nb * m, e);
}

digraph antipodal_quotient(const digraph& g) {
  require(is_distance_regular(g), errc::precondition,
          "antipodal_quotient: input is not a distance-regular digraph");
  const int girth = g.girth();
  require(girth >= 3, errc::precondition, "antipodal_quotient: girth must be >= 3");
  require(g.diameter() == girth, errc::precondition,
          "antipodal_quotient: not of long type (diameter != girth)");

  const int n = g.order();
  // Union classes of vertices at mutual distance g.
  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.distance(x, y) == girth && g.distance(y, x) == girth) rep[find(x)] = find(y);

  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
  const int q = static_cast<int>(classes.size());
  require(n % q == 0, errc::consistency, "antipodal classes do not partition evenly");
  const int m = n / q;
  require(m >= 2, errc::consistency, "antipodal classes are trivial");

  std::vector<std::vector<int>> cls;
  std::vector<int> class_of(n, -1);
  for (auto& [r, verts] : classes) {
    require(static_cast<int>(verts.size()) == m, errc::consistency,
            "antipodal classes have non-uniform sizes");
    for (int x : verts)
      for (int y : verts)
        require(x == y || (g.distance(x, y) == girth && g.distance(y, x) == girth),
                errc::consistency, "antipodal relation is not transitive");
    for (int v : verts) class_of[v] = static_cast<int>(cls.size());
    cls.push_back(verts);
  }

  // Arcs between two classes must be all-or-nothing and classes edge-free inside.
  std::vector<edge> qe;
  for (int p = 0; p < q; ++p)
    for (int r = 0; r < q; ++r) {
      int cnt = 0;
      for (int x : cls[p])
        for (int y : cls[r])
          if (x != y && g.has_edge(x, y)) ++cnt;
      if (p == r) {
        require(cnt == 0, errc::consistency, "edges inside an antipodal class");
        continue;
      }
      require(cnt == 0 || cnt == m * m, errc::consistency,
              "quotient edge relation is not well-defined");
      if (cnt > 0) qe.push_back({p, r});
    }
  return digraph::from_edges(q, qe);
}

digraph gamma_n(int n) {
  require(n >= 2, errc::range, "gamma_n: need n >= 2, got " + std::to_string(n));
  std::vector<edge> e;
  // forward cycle v_1 .. v_n on vertices 0..n-1
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  // backward cycle u_1, u_n, u_{n-1}, ..., u_2, u_1 on vertices n..2n-1
  e.push_back({n, 2 * n - 1});
  for (int i = 1; i <= n - 1; ++i) e.push_back({n + i, n + i - 1});
  // digon rungs v_i <-> u_i
  for (int i = 0; i < n; ++i) {
    e.push_back({i, n + i});
    e.push_back({n + i, i});
  }
  return digraph::from_edges(2 * n, e);
}

namespace {

struct srd_search {
  int n, k, t, lambda, mu;
  std::vector<word> rows;
  std::vector<int> coldeg;
  std::vector<digraph> found;

  bool feasible_after(int r) const {
    // in-degree bounds: remaining rows r+1..n-1 (skipping the column itself)
    for (int v = 0; v < n; ++v) {
      if (coldeg[v] > k) return false;
      int remaining = (n - 1 - r) - (v > r ? 1 : 0);
      if (k - coldeg[v] > remaining) return false;
    }
    // partial square entries: for decided u, count walks u->w->v over decided w
    for (int u = 0; u <= r; ++u) {
      word undecided = rows[u] & ~((r == 63) ? ~word(0) : ((word(1) << (r + 1)) - 1));
      bool complete = undecided == 0;
      for (int v = 0; v < n; ++v) {
        int s = 0;
        word nb = rows[u];
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          if (w > r) continue;
          s += static_cast<int>((rows[w] >> v) & 1);
        }
        int tgt = (u == v) ? t : (((rows[u] >> v) & 1) ? lambda : mu);
        if (s > tgt) return false;
        if (complete && s != tgt) return false;
      }
    }
    return true;
  }

  void place_row(int r) {
    if (r == n) {
      finish();
      return;
    }
    if (r == 0) {
      word mask = ((word(1) << k) - 1) << 1;  // {1..k}
      try_row(0, mask);
      return;
    }
    // iterate k-subsets of {0..n-1} \ {r} via an index array
    std::vector<int> idx(k);
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (v != r) pool.push_back(v);
    const int p = static_cast<int>(pool.size());
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      word mask = 0;
      for (int i = 0; i < k; ++i) mask |= word(1) << pool[idx[i]];
      try_row(r, mask);
      int i = k - 1;
      while (i >= 0 && idx[i] == p - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  void try_row(int r, word mask) {
    rows[r] = mask;
    word m = mask;
    while (m) {
      ++coldeg[std::countr_zero(m)];
      m &= m - 1;
    }
    if (feasible_after(r)) place_row(r + 1);
    m = mask;
    while (m) {
      --coldeg[std::countr_zero(m)];
      m &= m - 1;
    }
    rows[r] = 0;
  }

  void finish() {
    bit_matrix adj(n);
    for (int u = 0; u < n; ++u) {
      word m = rows[u];
      while (m) {
        adj.set(u, std::countr_zero(m));
        m &= m - 1;
      }
    }
    digraph g = digraph::from_adjacency(std::move(adj));
    auto p = srd_parameters(g);
    require(p && p->k == k && p->t == t && p->lambda == lambda && (!p->mu || *p->mu == mu),
            errc::consistency, "search produced a non-matching digraph");
    found.push_back(std::move(g));
  }
};

}  // namespace

std::vector<digraph> find_srd(int n, int k, int t, int lambda, int mu) {
  require(n >= 1 && n <= 64, errc::range, "find_srd: supported order is 1..64");
  require(0 <= k && k <= n - 1, errc::precondition, "find_srd: need 0 <= k <= n-1");
  require(0 <= t && t <= k, errc::precondition, "find_srd: need 0 <= t <= k");
  require(0 <= lambda && lambda <= k, errc::precondition, "find_srd: need 0 <= lambda <= k");
  require(0 <= mu && mu <= k, errc::precondition, "find_srd: need 0 <= mu <= k");

  if (k == 0) return {};

  srd_search s;
  s.n = n;
  s.k = k;
  s.t = t;
  s.lambda = lambda;
  s.mu = mu;
  s.rows.assign(n, 0);
  s.coldeg.assign(n, 0);
  s.place_row(0);

  // keep one representative per isomorphism class
  std::vector<digraph> reps;
  for (digraph& g : s.found) {
    bool fresh = true;
    for (const digraph& r : reps)
      if (isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(g));
  }
  std::sort(reps.begin(), reps.end(),
            [](const digraph& a, const digraph& b) { return a.edges() < b.edges(); });
  return reps;
}

namespace {

bool extend_mapping(const digraph& a, const digraph& b, const std::vector<int>& order,
                    std::vector<int>& map_ab, std::vector<char>& used_b,
                    const std::vector<int>& ca, const std::vector<int>& cb, std::size_t pos) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < b.order(); ++y) {
    if (used_b[y] || ca[x] != cb[y]) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < pos && consistent; ++i) {
      int xp = order[i], yp = map_ab[xp];
      if (a.has_edge(x, xp) != b.has_edge(y, yp)) consistent = false;
      if (a.has_edge(xp, x) != b.has_edge(yp, y)) consistent = false;
    }
    if (!consistent) continue;
    map_ab[x] = y;
    used_b[y] = 1;
    if (extend_mapping(a, b, order, map_ab, used_b, ca, cb, pos + 1)) return true;
    used_b[y] = 0;
    map_ab[x] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const digraph& a, const digraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();

  // Iterated neighborhood refinement with a dictionary shared between the two
  // graphs, so color ids are directly comparable.
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) ca[v] = a.out_degree(v) * (n + 1) + a.in_degree(v);
  for (int v = 0; v < n; ++v) cb[v] = b.out_degree(v) * (n + 1) + b.in_degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [&](const digraph& g, const std::vector<int>& col, int v) {
      std::vector<int> outs, ins;
      for_each_bit(g.out_bits(v), [&](int w) { outs.push_back(col[w]); });
      for_each_bit(g.in_bits(v), [&](int w) { ins.push_back(col[w]); });
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::vector<int> s{col[v], -1};
      s.insert(s.end(), outs.begin(), outs.end());
      s.push_back(-2);
      s.insert(s.end(), ins.begin(), ins.end());
      return s;
    };
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v)
      na[v] = ids.try_emplace(signature(a, ca, v), static_cast<int>(ids.size())).first->second;
    for (int v = 0; v < n; ++v)
      nb[v] = ids.try_emplace(signature(b, cb, v), static_cast<int>(ids.size())).first->second;
    bool stable = (na == ca && nb == cb);
    ca = na;
    cb = nb;
    if (stable) break;
  }
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }

  // Map most-constrained vertices first: ascending color class size.
  std::map<int, int> class_size;
  for (int x : ca) ++class_size[x];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size.at(ca[x]) != class_size.at(ca[y]))
      return class_size.at(ca[x]) < class_size.at(ca[y]);
    return x < y;
  });

  std::vector<int> map_ab(n, -1);
  std::vector<char> used_b(n, 0);
  return extend_mapping(a, b, order, map_ab, used_b, ca, cb, 0);
}

void enumerate_k_regular(int n, int k, bool fix_first_row,
                         const std::function<bool(const digraph&)>& visit) {
  require(n >= 1 && n <= 64, errc::range, "enumerate_k_regular: supported order is 1..64");
  require(k >= 0 && k <= n - 1, errc::range, "enumerate_k_regular: need 0 <= k <= n-1");
  if (k == 0) {
    if (n == 1) visit(digraph::from_edges(1, {}));
    return;
  }

  std::vector<word> rows(n, 0);
  std::vector<int> coldeg(n, 0);
  bool stopped = false;

  auto rec = [&](auto&& self, int r) -> void {
    if (stopped) return;
    if (r == n) {
      bit_matrix adj(n);
      for (int u = 0; u < n; ++u) {
        word m = rows[u];
        while (m) {
          adj.set(u, std::countr_zero(m));
          m &= m - 1;
        }
      }
      if (!visit(digraph::from_adjacency(std::move(adj)))) stopped = true;
      return;
    }
    auto try_mask = [&](word mask) {
      rows[r] = mask;
      word m = mask;
      bool ok = true;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (++coldeg[v] > k) ok = false;
      }
      if (ok) {
        for (int v = 0; v < n && ok; ++v) {
          int remaining = (n - 1 - r) - (v > r ? 1 : 0);
          if (k - coldeg[v] > remaining) ok = false;
        }
      }
      if (ok) self(self, r + 1);
      m = mask;
      while (m) {
        --coldeg[std::countr_zero(m)];
        m &= m - 1;
      }
      rows[r] = 0;
    };
    if (r == 0 && fix_first_row) {
      try_mask((((word(1) << k)) - 1) << 1);  // {1..k}
      return;
    }
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (v != r) pool.push_back(v);
    const int p = static_cast<int>(pool.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (!stopped) {
      word mask = 0;
      for (int i = 0; i < k; ++i) mask |= word(1) << pool[idx[i]];
      try_mask(mask);
      int i = k - 1;
      while (i >= 0 && idx[i] == p - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  rec(rec, 0);
}

}  // namespace drdlab
