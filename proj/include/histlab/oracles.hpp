#pragma once

#include "histlab/bigcount.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// Number of spanning trees via the matrix-tree theorem: determinant of a
// Laplacian principal minor in exact integer arithmetic (fraction-free
// Bareiss elimination). Disconnected graphs give 0.
BigCount kirchhoff_count(const Graph& g);

// HIST count by exchange enumeration: start from a DFS spanning tree and
// walk fundamental cycles, swapping edges in and out. Independent of the
// degree branch-and-bound.
BigCount count_hists_exchange(const Graph& g);

// Same enumeration with the degree pruning and final filter disabled; visits
// (and counts) every spanning tree. Must equal kirchhoff_count.
BigCount exchange_spanning_trees(const Graph& g);

// Dumb oracle: enumerate all (n-1)-edge subsets and keep the spanning,
// acyclic, 2-vertex-free ones. Guarded to n <= 12.
BigCount brute_force_hists(const Graph& g);

// Bitmask DP over (subset, endpoint); guarded to n <= 24.
bool ham_path_exists(const Graph& g);

// s(G): maximum size of a vertex subset inducing a forest; n <= 24.
int max_induced_forest(const Graph& g);

// For cubic connected g on 4k+2 vertices: number of induced trees T such
// that every edge outside T has exactly one end on T (equivalently, V \ T is
// independent). 3k of these correspond to each HIST of the line graph.
BigCount count_one_end_induced_trees(const Graph& g);

// For cubic connected g on 4k vertices: number of induced connected
// unicyclic subgraphs with the same one-end property; 6k per line-graph HIST.
BigCount count_one_end_induced_unicyclics(const Graph& g);

}  // namespace histlab
