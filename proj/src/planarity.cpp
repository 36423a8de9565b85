#include "histlab/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace histlab {

bool is_planar(const Graph& g) {
    const int n = g.order();
    if (n <= 4) return true;
    if (g.size() > 3 * n - 6) return false;  // Euler bound
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(n);
    for (int u = 0; u < n; ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) boost::add_edge(u, v, bg);
        });
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace histlab
