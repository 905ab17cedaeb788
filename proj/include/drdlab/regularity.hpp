#pragma once

#include <optional>
#include <vector>

#include "drdlab/digraph.hpp"

namespace drdlab {

/// First ordered pair violating a constancy requirement, together with the
/// shell index i (distance-regularity) or walk length l (weak regularity).
struct pair_witness {
  int u = -1;
  int v = -1;
  int index = -1;
  long long expected = 0;
  long long actual = 0;
};

/// Table a[k][i] = |shell_i(u) ∩ out(v)| over ordered pairs at distance k,
/// for k in 1..D and i in 0..k+1.
class intersection_table {
public:
  intersection_table() = default;
  intersection_table(int valency, int diameter, std::vector<std::vector<int>> a)
      : valency_(valency), diameter_(diameter), a_(std::move(a)) {}

  int valency() const { return valency_; }
  int diameter() const { return diameter_; }
  int at(int k, int i) const { return a_[k][i]; }
  int lambda() const { return a_[1][1]; }

private:
  int valency_ = 0;
  int diameter_ = 0;
  std::vector<std::vector<int>> a_;  // a_[k] has k+2 entries; a_[0] unused
};

struct intersection_result {
  std::optional<intersection_table> table;
  std::optional<pair_witness> witness;
  bool ok() const { return table.has_value(); }
};

/// Requires strong connectivity, regularity and n >= 2 (precondition error otherwise).
intersection_result intersection_numbers(const digraph& g);
bool is_distance_regular(const digraph& g);

/// A·Aᵗ == Aᵗ·A, entrywise over exact integers. No preconditions.
bool is_normal(const digraph& g);

class walk_matrix {
public:
  walk_matrix() = default;
  walk_matrix(int n, std::vector<unsigned long long> m) : n_(n), m_(std::move(m)) {}
  int order() const { return n_; }
  unsigned long long at(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }
  friend bool operator==(const walk_matrix&, const walk_matrix&) = default;

private:
  int n_ = 0;
  std::vector<unsigned long long> m_;
};

/// l-th power of the adjacency matrix under exact integer arithmetic.
walk_matrix walk_counts(const digraph& g, int len);

struct weak_regularity_result {
  bool ok = false;
  std::optional<pair_witness> witness;  // (u, v, l) on failure
  // Diagnostic: whether constancy extends to walk lengths up to 2·D.
  bool constant_to_twice_diameter = false;
};

/// Requires strong connectivity and regularity.
weak_regularity_result weak_regularity(const digraph& g);
bool is_weakly_distance_regular(const digraph& g);

struct srd_params {
  int n = 0;
  int k = 0;
  int t = 0;
  int lambda = 0;
  std::optional<int> mu;  // absent-by-vacuity when no non-adjacent ordered pair exists
  friend bool operator==(const srd_params&, const srd_params&) = default;
};

/// Present iff g is k-regular and its length-2 walk counts are constant on the
/// diagonal / adjacent / non-adjacent classes of ordered pairs.
std::optional<srd_params> srd_parameters(const digraph& g);

/// dist(x,y) + dist(y,x) == girth whenever 0 < dist(x,y) < girth.
bool is_stable(const digraph& g);

enum class drd_kind { short_type, long_type };

/// Requires a distance-regular digraph with girth >= 3; D must be g or g-1.
drd_kind drd_type(const digraph& g);

struct a11_check {
  bool ok = false;
  int failing_length = -1;  // smallest l in 2..D with a(1,1;l) == 0, when !ok
};

/// a(1,1;l) >= 1 for every l in 2..D. Requires a DRD with girth >= 3.
a11_check check_a11_lemma(const digraph& g);

struct block_structure {
  int t = 0;
  int rho = 0;
  std::vector<std::vector<int>> blocks;  // ordered cyclically, starting at vertex 0's block
};

/// Detects whether g is a block cycle C[X1..Xt] with t >= 3 equal blocks:
/// vertices are grouped by identical out-neighborhoods and the groups must
/// form a single directed cycle of complete block arcs.
std::optional<block_structure> family_d(const digraph& g);

}  // namespace drdlab
