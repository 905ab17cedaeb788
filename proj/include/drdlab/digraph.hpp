#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "drdlab/error.hpp"

namespace drdlab {

using word = std::uint64_t;

struct edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const edge&, const edge&) = default;
};

enum class direction { out, in };

/// Packed n x n bit matrix, row-major, 64 bits per word.
class bit_matrix {
public:
  bit_matrix() = default;
  explicit bit_matrix(int n)
      : n_(n),
        words_((n + 63) / 64),
        bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0) {}

  int dimension() const { return n_; }
  int words_per_row() const { return words_; }

  bool get(int u, int v) const { return (bits_[offset(u) + v / 64] >> (v % 64)) & word(1); }
  void set(int u, int v) { bits_[offset(u) + v / 64] |= word(1) << (v % 64); }
  void reset(int u, int v) { bits_[offset(u) + v / 64] &= ~(word(1) << (v % 64)); }

  std::span<const word> row(int u) const {
    return {bits_.data() + offset(u), static_cast<std::size_t>(words_)};
  }
  std::span<word> row(int u) { return {bits_.data() + offset(u), static_cast<std::size_t>(words_)}; }

  friend bool operator==(const bit_matrix&, const bit_matrix&) = default;

private:
  std::size_t offset(int u) const { return static_cast<std::size_t>(u) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<word> bits_;
};

inline int popcount(std::span<const word> row) {
  int c = 0;
  for (word w : row) c += std::popcount(w);
  return c;
}

inline int popcount_and(std::span<const word> a, std::span<const word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

template <class F>
void for_each_bit(std::span<const word> row, F&& fn) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    word w = row[i];
    while (w) {
      int b = std::countr_zero(w);
      fn(static_cast<int>(i * 64 + b));
      w &= w - 1;
    }
  }
}

/// All-pairs directed distances of a strongly connected digraph.
class distance_matrix {
public:
  distance_matrix() = default;
  distance_matrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

  int order() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
  int n_ = 0;
  std::vector<int> d_;
};

/// Immutable finite simple digraph. Adjacency is kept as packed bit rows
/// (one word per row up to 64 vertices); distances, degrees and the strong
/// connectivity verdict are computed once at construction.
class digraph {
public:
  static digraph from_edges(int n, std::span<const edge> edges);
  static digraph from_edges(int n, std::initializer_list<edge> edges);
  static digraph from_adjacency(bit_matrix adj);  // validates the zero diagonal

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const { return adj_.get(u, v); }
  std::vector<edge> edges() const;  // lexicographically sorted

  std::span<const word> out_bits(int u) const { return adj_.row(u); }
  std::span<const word> in_bits(int u) const { return radj_.row(u); }
  const bit_matrix& adjacency() const { return adj_; }

  int out_degree(int u) const { return out_deg_[u]; }
  int in_degree(int u) const { return in_deg_[u]; }
  std::optional<int> regular_degree() const { return regular_degree_; }

  bool is_strongly_connected() const { return strongly_connected_; }
  /// Valid only when not strongly connected: an ordered pair (a,b) with no a->b path.
  std::pair<int, int> unreachable_pair() const { return unreachable_; }
  bool is_undirected() const { return undirected_; }

  const distance_matrix& distances() const;  // throws not_strongly_connected
  int distance(int u, int v) const { return distances().at(u, v); }
  int diameter() const;
  int girth() const;  // throws for n == 1
  bool has_digon() const { return has_digon_; }

  std::vector<int> shell(int x, int k, direction dir) const;
  /// Bitmask of the shell, as row words (out: dist(x,.)==k; in: dist(.,x)==k).
  std::vector<word> shell_bits(int x, int k, direction dir) const;

  digraph reversed() const;

  friend bool operator==(const digraph& a, const digraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  explicit digraph(bit_matrix adj);

  int n_ = 0;
  bit_matrix adj_;
  bit_matrix radj_;
  int edge_count_ = 0;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
  std::optional<int> regular_degree_;
  bool undirected_ = false;
  bool has_digon_ = false;
  bool strongly_connected_ = false;
  std::pair<int, int> unreachable_{-1, -1};
  distance_matrix dist_;
  int diameter_ = 0;
  int girth_ = 0;  // valid when strongly connected and n >= 2
};

}  // namespace drdlab
