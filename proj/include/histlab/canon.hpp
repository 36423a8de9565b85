#pragma once

#include <string>
#include <vector>

#include "histlab/graph.hpp"

namespace histlab {

// Canonical labeling by partition refinement with automorphism-pruned
// backtracking. labeling[v] is the canonical position of v; orbit[v] the
// smallest vertex in v's automorphism orbit; generators spans Aut(g).
struct CanonResult {
    std::vector<int> labeling;
    Graph canonical;
    std::vector<int> orbit;
    std::vector<std::vector<int>> generators;
};

CanonResult canonical_form(const Graph& g);

// Canonical graph6 string: equal iff isomorphic.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Relabel: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace histlab
