#include "drdlab/regularity.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace drdlab {

namespace {

void require_regular_connected(const digraph& g, const char* op) {
  require(g.is_strongly_connected(), errc::precondition,
          std::string(op) + ": digraph is not strongly connected");
  require(g.regular_degree().has_value(), errc::precondition,
          std::string(op) + ": digraph is not regular");
}

}  // namespace

intersection_result intersection_numbers(const digraph& g) {
  require_regular_connected(g, "intersection_numbers");
  require(g.order() >= 2, errc::precondition, "intersection_numbers: need n >= 2");

  const int n = g.order();
  const int D = g.diameter();
  const int k_val = *g.regular_degree();

  // shells[u][i]: bitmask of vertices at distance i from u
  std::vector<std::vector<std::vector<word>>> shells(n);
  for (int u = 0; u < n; ++u) {
    shells[u].assign(D + 1, std::vector<word>(g.adjacency().words_per_row(), 0));
    for (int v = 0; v < n; ++v) {
      int d = g.distance(u, v);
      shells[u][d][v / 64] |= word(1) << (v % 64);
    }
  }

  std::vector<std::vector<int>> a(D + 1);
  for (int k = 1; k <= D; ++k) a[k].assign(k + 2, -1);

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int k = g.distance(u, v);
      for (int i = 0; i <= k + 1 && i <= D; ++i) {
        int cnt = popcount_and(shells[u][i], g.out_bits(v));
        if (a[k][i] < 0) {
          a[k][i] = cnt;
        } else if (a[k][i] != cnt) {
          return {std::nullopt, pair_witness{u, v, i, a[k][i], cnt}};
        }
      }
      if (k + 1 > D) a[k][k + 1] = 0;  // shell k+1 is empty at k == D
    }
  }

  // Row sums must recover the valency: an out-neighbor of v sits at distance
  // at most k+1 from u, so the shells 0..k+1 cover all of out(v).
  for (int k = 1; k <= D; ++k) {
    int sum = 0;
    for (int i = 0; i <= k + 1; ++i) sum += a[k][i];
    require(sum == k_val, errc::consistency, "intersection table row does not sum to the valency");
  }

  return {intersection_table(k_val, D, std::move(a)), std::nullopt};
}

bool is_distance_regular(const digraph& g) { return intersection_numbers(g).ok(); }

bool is_normal(const digraph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (popcount_and(g.out_bits(u), g.out_bits(v)) != popcount_and(g.in_bits(u), g.in_bits(v)))
        return false;
  return true;
}

walk_matrix walk_counts(const digraph& g, int len) {
  require(len >= 0, errc::precondition, "walk_counts: length must be >= 0");
  const int n = g.order();
  std::vector<unsigned long long> m(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) m[static_cast<std::size_t>(u) * n + u] = 1;
  std::vector<unsigned long long> next(m.size());
  for (int step = 0; step < len; ++step) {
    std::fill(next.begin(), next.end(), 0ull);
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) {
        unsigned long long c = m[static_cast<std::size_t>(u) * n + w];
        if (!c) continue;
        for_each_bit(g.out_bits(w),
                     [&](int v) { next[static_cast<std::size_t>(u) * n + v] += c; });
      }
    }
    m.swap(next);
  }
  return walk_matrix(n, std::move(m));
}

weak_regularity_result weak_regularity(const digraph& g) {
  require_regular_connected(g, "weak_regularity");

  const int n = g.order();
  const int D = g.diameter();
  weak_regularity_result res;
  res.ok = true;
  res.constant_to_twice_diameter = true;

  walk_matrix m = walk_counts(g, 0);
  std::vector<unsigned long long> cur(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(u) * n + v] = m.at(u, v);

  std::vector<unsigned long long> next(cur.size());
  for (int len = 0; len <= 2 * D; ++len) {
    // reference value per distance class, from the lexicographically first pair
    std::vector<long long> ref(D + 1, -1);
    for (int u = 0; u < n && res.ok; ++u) {
      for (int v = 0; v < n; ++v) {
        int d = g.distance(u, v);
        long long c = static_cast<long long>(cur[static_cast<std::size_t>(u) * n + v]);
        if (ref[d] < 0) {
          ref[d] = c;
        } else if (ref[d] != c) {
          if (len <= D) {
            res.ok = false;
            res.witness = pair_witness{u, v, len, ref[d], c};
          }
          res.constant_to_twice_diameter = false;
          break;
        }
      }
    }
    if (!res.ok || !res.constant_to_twice_diameter) break;
    if (len == 2 * D) break;
    std::fill(next.begin(), next.end(), 0ull);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        unsigned long long c = cur[static_cast<std::size_t>(u) * n + w];
        if (!c) continue;
        for_each_bit(g.out_bits(w),
                     [&](int v) { next[static_cast<std::size_t>(u) * n + v] += c; });
      }
    cur.swap(next);
  }
  return res;
}

bool is_weakly_distance_regular(const digraph& g) { return weak_regularity(g).ok; }

std::optional<srd_params> srd_parameters(const digraph& g) {
  auto k = g.regular_degree();
  if (!k) return std::nullopt;
  const int n = g.order();
  walk_matrix sq = walk_counts(g, 2);

  long long t = -1, lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      long long c = static_cast<long long>(sq.at(u, v));
      long long* slot = (u == v) ? &t : (g.has_edge(u, v) ? &lambda : &mu);
      if (*slot < 0)
        *slot = c;
      else if (*slot != c)
        return std::nullopt;
    }
  }
  srd_params p;
  p.n = n;
  p.k = *k;
  p.t = static_cast<int>(t);
  p.lambda = lambda < 0 ? 0 : static_cast<int>(lambda);  // vacuous only when edgeless
  if (mu >= 0) p.mu = static_cast<int>(mu);
  return p;
}

bool is_stable(const digraph& g) {
  require(g.is_strongly_connected(), errc::precondition,
          "is_stable: digraph is not strongly connected");
  require(g.order() >= 2, errc::precondition, "is_stable: need n >= 2");
  const int n = g.order();
  const int girth = g.girth();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int d = g.distance(x, y);
      if (d > 0 && d < girth && d + g.distance(y, x) != girth) return false;
    }
  return true;
}

drd_kind drd_type(const digraph& g) {
  require(is_distance_regular(g), errc::precondition, "drd_type: not a distance-regular digraph");
  const int girth = g.girth();
  require(girth >= 3, errc::precondition, "drd_type: girth must be >= 3");
  const int D = g.diameter();
  if (D == girth) return drd_kind::long_type;
  if (D == girth - 1) return drd_kind::short_type;
  fail(errc::consistency,
       "distance-regular digraph with girth " + std::to_string(girth) + " has diameter " +
           std::to_string(D) + ", expected g or g-1");
}

a11_check check_a11_lemma(const digraph& g) {
  intersection_result r = intersection_numbers(g);
  require(r.ok(), errc::precondition, "check_a11_lemma: not a distance-regular digraph");
  require(g.girth() >= 3, errc::precondition, "check_a11_lemma: girth must be >= 3");
  for (int l = 2; l <= r.table->diameter(); ++l)
    if (r.table->at(l, 1) < 1) return {false, l};
  return {true, -1};
}

std::optional<block_structure> family_d(const digraph& g) {
  const int n = g.order();
  const int wpr = g.adjacency().words_per_row();

  // Group vertices by identical out-neighborhood rows.
  std::map<std::vector<word>, std::vector<int>> groups;
  for (int u = 0; u < n; ++u) {
    std::vector<word> row(g.out_bits(u).begin(), g.out_bits(u).end());
    groups[row].push_back(u);
  }
  const int t = static_cast<int>(groups.size());
  if (t < 3) return std::nullopt;
  if (n % t != 0) return std::nullopt;
  const int rho = n / t;

  // Map each group's member mask to its index; the common row of a group must
  // equal the member mask of exactly one other group.
  std::vector<std::vector<word>> member_mask;
  std::vector<std::vector<word>> row_mask;
  std::vector<std::vector<int>> members;
  for (auto& [row, verts] : groups) {
    if (static_cast<int>(verts.size()) != rho) return std::nullopt;
    std::vector<word> mm(wpr, 0);
    for (int v : verts) mm[v / 64] |= word(1) << (v % 64);
    member_mask.push_back(std::move(mm));
    row_mask.push_back(row);
    members.push_back(verts);
  }

  std::vector<int> succ(t, -1);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j)
      if (row_mask[i] == member_mask[j]) {
        succ[i] = j;
        break;
      }
    if (succ[i] < 0) return std::nullopt;
  }

  // The successor map must be a single t-cycle over all groups.
  std::vector<char> seen(t, 0);
  int start = 0;
  for (int i = 0; i < t; ++i)
    if (std::find(members[i].begin(), members[i].end(), 0) != members[i].end()) start = i;
  block_structure bs;
  bs.t = t;
  bs.rho = rho;
  int cur = start;
  for (int step = 0; step < t; ++step) {
    if (seen[cur]) return std::nullopt;
    seen[cur] = 1;
    bs.blocks.push_back(members[cur]);
    cur = succ[cur];
  }
  if (cur != start) return std::nullopt;
  for (int i = 0; i < t; ++i)
    if (!seen[i]) return std::nullopt;
  return bs;
}

}  // namespace drdlab
