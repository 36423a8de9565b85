#pragma once

#include <map>
#include <string>
#include <vector>

#include "histlab/fragment.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// A constructed graph together with a bijection from the construction's
// vertex names ("a3", "w0", "x", ...) onto vertex indices.
struct LabeledConstruction {
    Graph graph;
    std::map<std::string, int> labels;

    int label(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) throw std::domain_error("unknown label " + name);
        return it->second;
    }
};

struct LabeledFragment {
    Fragment fragment;
    std::map<std::string, int> labels;

    int label(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) throw std::domain_error("unknown label " + name);
        return it->second;
    }
};

// 4-regular planar graph of order 2k: outer cycle v0..v(k-1), inner cycle
// w0..w(k-1), rim edges v_i w_i and v_i w_(i+1). Requires k >= 3.
LabeledConstruction antiprism(int k);

// The planar family on vertices a1..ak, b1..bk, c1..c(k-1), x, y of order
// 3k+1. Requires k >= 3.
LabeledConstruction g_k(int k);

// g_k plus the edge a1 ak.
LabeledConstruction h_k(int k);

// The two fixed fragments (8 vertices / 10 edges and 12 vertices / 16
// edges) with terminals x, y.
LabeledFragment fragment_f1();
LabeledFragment fragment_f2();

// Ring of k >= 2 fragments: the y-terminal of each fragment is identified
// with the x-terminal of the next (cyclically). Order = sum |V| - k.
Graph chain(const std::vector<Fragment>& fragments);

// Identify xg with xh and yg with yh, add a new vertex z joined to both
// merged vertices, then add the edge xy. Requires both terminal pairs to be
// non-adjacent. Vertex order: interior of g, interior of h, x, y, z.
Graph glue(const Graph& g, int xg, int yg, const Graph& h, int xh, int yh);

// Vertices = edges of g (lexicographic), adjacent iff they share an end.
Graph line_graph(const Graph& g);

// Replace each vertex of a cubic graph by a triangle whose corners carry the
// three incident edges. Order 3n, cubic.
Graph truncate_cubic(const Graph& g);

// Replace each vertex of a 4-regular graph by a K4 whose corners carry the
// four incident edges (ascending neighbor order). Order 4n, 4-regular.
Graph inflate_k4(const Graph& g);

}  // namespace histlab
