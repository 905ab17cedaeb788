#pragma once

#include <span>
#include <string>
#include <vector>

#include "drdlab/digraph.hpp"

namespace drdlab {

enum class cut_tag { out_star, in_star, out_neighborhood, in_neighborhood, non_trivial };

struct cut_class {
  cut_tag tag = cut_tag::non_trivial;
  int vertex = -1;  // the star / neighborhood center, when applicable
  bool both = false;  // the cut is simultaneously of the out- and in- kind
};

std::string to_string(const cut_class& c);

struct edge_cut {
  std::vector<int> side_a;            // canonical side: vertices with no path to the rest
  std::vector<edge> crossing;         // sorted edge set [A, V-A]
  int size = 0;
  std::vector<std::vector<int>> generating_sides;  // every bipartition producing this edge set
};

struct vertex_cut {
  std::vector<int> vertices;
  int size = 0;
};

struct max_flow_result {
  int value = 0;
  std::vector<int> side_a;     // residual-reachable side of one minimum cut
  std::vector<edge> crossing;  // its crossing edges
};

/// Unit-capacity maximum flow between distinct vertices.
max_flow_result max_flow(const digraph& g, int s, int t);

/// Minimum over all [A, V-A] crossing sets; requires strong connectivity, n >= 2.
int edge_connectivity(const digraph& g);

/// All distinct minimum crossing edge sets, each with its canonical side and
/// every generating bipartition; sorted by edge sequence.
std::vector<edge_cut> enumerate_min_edge_cuts(const digraph& g);

/// OutStar(v) when the cut is all edges leaving v, InStar(v) when it is all
/// edges entering v, NonTrivial otherwise. Validates the cut first.
cut_class classify_edge_cut(const digraph& g, const edge_cut& cut);

/// |[A, V-A]| == |[V-A, A]|; requires a regular digraph and a nonempty proper A.
bool check_cut_balance(const digraph& g, std::span<const int> side_a);

/// Vertex connectivity via the vertex-splitting reduction over all
/// non-adjacent ordered pairs; errors on complete digraphs.
int vertex_connectivity(const digraph& g);
std::vector<vertex_cut> enumerate_min_vertex_cuts(const digraph& g);
cut_class classify_vertex_cut(const digraph& g, const vertex_cut& cut);

}  // namespace drdlab
