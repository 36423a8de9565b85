#pragma once

#include <stdexcept>

#include "histlab/graph.hpp"

namespace histlab {

// A graph with two distinguished terminals x, y. Terminals must be distinct
// and non-adjacent (adjacent terminals would create parallel edges in the
// chain construction, so they are rejected up front).
struct Fragment {
    Graph graph;
    int x;
    int y;

    Fragment(Graph g, int x_, int y_) : graph(std::move(g)), x(x_), y(y_) {
        if (x < 0 || y < 0 || x >= graph.order() || y >= graph.order())
            throw std::domain_error("fragment terminal out of range");
        if (x == y) throw std::domain_error("fragment terminals must be distinct");
        if (graph.has_edge(x, y))
            throw std::domain_error("fragment terminals must be non-adjacent");
    }
};

}  // namespace histlab
