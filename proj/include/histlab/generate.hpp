#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "histlab/graph.hpp"

namespace histlab {

// Constraints for the exhaustive generator. regular_k sets both degree
// bounds. connectivity_min unset means disconnected graphs are emitted too.
struct GenConstraints {
    int order = 0;
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<int> regular_k;
    std::optional<int> connectivity_min;  // 1, 2 or 4 in practice
    std::optional<int> girth_min;
    bool planar_only = false;
};

// Emits exactly one representative per isomorphism class satisfying c, in a
// deterministic order, by canonical augmentation (grow one vertex at a time,
// keep a child only when the new vertex is a canonical deletion choice).
// Girth and degree constraints prune the augmentation; connectivity and
// exact planarity are filters at the target order. The callback returns
// false to stop early. Orders above 11 are refused.
void generate(const GenConstraints& c, const std::function<bool(const Graph&)>& emit);

std::vector<Graph> generate_all(const GenConstraints& c);

// Validation oracle: all 2^(n(n-1)/2) labeled graphs reduced to one
// representative per class by the minimum adjacency bitstring over all n!
// permutations. Refuses n > 7.
std::vector<Graph> brute_mask_generate(int n);

}  // namespace histlab
