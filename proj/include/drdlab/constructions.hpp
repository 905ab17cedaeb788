#pragma once

#include <functional>
#include <vector>

#include "drdlab/digraph.hpp"
#include "drdlab/regularity.hpp"

namespace drdlab {

digraph directed_cycle(int n);    // n >= 2
digraph undirected_cycle(int n);  // n >= 3

/// C[X1..Xt] with t blocks of size rho; vertex j lies in block j / rho and
/// all arcs run from each block to the cyclically next one.
digraph block_cycle(int t, int rho);  // t >= 2, rho >= 1

/// m-fold blow-up: vertex set V(base) x {1..m}; (u,i) -> (v,j) iff u -> v.
/// Vertex (u,i) is numbered u*m + i.
digraph damerell_lift(const digraph& base, int m);  // m >= 2

/// Inverse of the lift for long-type distance-regular digraphs (D == g >= 3):
/// identifies classes of vertices at mutual distance g. The class partition,
/// uniform class size and all-or-nothing arcs between classes are verified.
digraph antipodal_quotient(const digraph& g);

/// Two n-cycles traversed in opposite directions, joined by a digon rung at
/// each position: 2n vertices, 2-regular. Vertex i is v_{i+1}, n+i is u_{i+1}.
digraph gamma_n(int n);  // n >= 2

/// Exhaustive backtracking search for k-regular digraphs whose squared
/// adjacency matrix is t·I + lambda·A + mu·(J - I - A). Output is pairwise
/// non-isomorphic and sorted by edge-list encoding; complete for n <= 10.
std::vector<digraph> find_srd(int n, int k, int t, int lambda, int mu);

/// Exact isomorphism test by backtracking over color-refined vertex classes.
bool isomorphic(const digraph& a, const digraph& b);

/// Enumerates k-regular digraphs on n labeled vertices row by row with
/// in-degree pruning. With fix_first_row, vertex 0's out-neighborhood is
/// pinned to {1..k}, which keeps at least one representative per isomorphism
/// class. The visitor returns false to stop the enumeration.
void enumerate_k_regular(int n, int k, bool fix_first_row,
                         const std::function<bool(const digraph&)>& visit);

}  // namespace drdlab
