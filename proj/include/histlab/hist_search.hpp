#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "histlab/bigcount.hpp"
#include "histlab/fragment.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// Vertices allowed to keep degree 2 in the result (the excluded pair {x,y};
// empty for plain HISTs).
struct ExemptSet {
    VertexSet vertices;

    ExemptSet() = default;
    explicit ExemptSet(VertexSet v) : vertices(v) {}
    static ExemptSet of(std::initializer_list<int> vs) {
        ExemptSet e;
        for (int v : vs) e.vertices.set(v);
        return e;
    }
};

// Exact number of spanning trees T of g with d_T(v) != 2 for every
// non-exempt v. Disconnected graphs count 0, the empty graph 0, a single
// vertex 1. With stop_after set, returns min(true count, stop_after) and
// stops the search early.
BigCount count_hists(const Graph& g, const ExemptSet& exempt = {},
                     std::optional<std::uint64_t> stop_after = std::nullopt);

bool has_hist(const Graph& g, const ExemptSet& exempt = {});

// First HIST in search order, re-verified before returning. Absent when the
// graph is HIST-free.
std::optional<std::vector<Edge>> find_hist(const Graph& g, const ExemptSet& exempt = {});

// Visits every qualifying spanning tree in deterministic search order; the
// callback returns false to stop. Edge lists arrive sorted.
void for_each_hist(const Graph& g, const ExemptSet& exempt,
                   const std::function<bool(const std::vector<Edge>&)>& visit);

// All {x,y}-excluded HISTs of the fragment graph, in deterministic order.
std::vector<std::vector<Edge>> enumerate_excluded_hists(const Fragment& f);

// Spanning forests with exactly two components, terminals separated, both
// components on >= 2 vertices and no non-exempt 2-vertex. first = the
// component containing x, second = the one containing y.
using SplitHisf = std::pair<std::vector<Edge>, std::vector<Edge>>;
std::vector<SplitHisf> enumerate_split_hisfs(const Fragment& f);
void for_each_split_hisf(const Fragment& f,
                         const std::function<bool(const SplitHisf&)>& visit);

// Verification hook: runs the same branch-and-bound with the two HIST
// pruning rules and the final degree filter disabled, returning the number
// of complete spanning trees visited. Must equal the matrix-tree count.
BigCount spanning_trees_visited(const Graph& g);

// Independent witness check: spanning, acyclic, and degree != 2 outside the
// exempt set.
bool is_valid_hist(const Graph& g, const std::vector<Edge>& tree, const ExemptSet& exempt = {});

}  // namespace histlab
