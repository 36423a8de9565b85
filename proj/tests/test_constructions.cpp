#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "histlab/canon.hpp"
#include "histlab/classify.hpp"
#include "histlab/constructions.hpp"
#include "histlab/hist_search.hpp"
#include "histlab/planarity.hpp"
#include "test_util.hpp"

using namespace histlab;
using namespace histlab::test;

TEST_CASE("antiprism structure") {
    LabeledConstruction a3 = antiprism(3);
    CHECK(a3.graph.order() == 6);
    CHECK(a3.graph.size() == 12);
    CHECK(isomorphic(a3.graph, octahedron()));

    for (int k = 3; k <= 10; ++k) {
        Graph g = antiprism(k).graph;
        CHECK(g.order() == 2 * k);
        CHECK(is_regular(g, 4));
        CHECK(is_planar(g));
        CHECK(vertex_connectivity_at_least(g, 4));
    }
    CHECK_THROWS_AS(antiprism(2), std::domain_error);
}

TEST_CASE("antiprism HIST counts match the closed form") {
    for (int k = 3; k <= 6; ++k)
        CHECK(count_hists(antiprism(k).graph) == 2 * k * (2 * k - 2));
}

TEST_CASE("antiprism HISTs have k+1 leaves and k-1 3-vertices") {
    for (int k = 3; k <= 5; ++k) {
        Graph g = antiprism(k).graph;
        int seen = 0;
        for_each_hist(g, {}, [&](const std::vector<Edge>& t) {
            std::vector<int> deg(g.order(), 0);
            for (const Edge& e : t) {
                ++deg[e.u];
                ++deg[e.v];
            }
            int ones = 0, threes = 0, fours = 0;
            for (int v = 0; v < g.order(); ++v) {
                ones += deg[v] == 1;
                threes += deg[v] == 3;
                fours += deg[v] == 4;
            }
            CHECK(fours == 0);
            CHECK(ones == k + 1);
            CHECK(threes == k - 1);
            ++seen;
            return true;
        });
        CHECK(seen == 2 * k * (2 * k - 2));
    }
}

TEST_CASE("g_k and h_k") {
    LabeledConstruction g4 = g_k(4);
    CHECK(g4.graph.order() == 13);  // 3k+1
    CHECK(g4.graph.size() == 6 * 3 + 5);
    CHECK(is_planar(g4.graph));
    CHECK(g4.graph.has_edge(g4.label("x"), g4.label("y")));
    CHECK(!g4.graph.has_edge(g4.label("a1"), g4.label("a4")));

    LabeledConstruction h4 = h_k(4);
    CHECK(h4.graph.order() == 13);
    CHECK(h4.graph.has_edge(h4.label("a1"), h4.label("a4")));
    CHECK(is_planar(h4.graph));

    for (int k = 3; k <= 8; ++k) CHECK(g_k(k).graph.order() == 3 * k + 1);
    CHECK(vertex_connectivity_at_least(h_k(6).graph, 3));
    CHECK_THROWS_AS(g_k(2), std::domain_error);

    // h_k is exactly g_k plus the a1-ak edge.
    Graph plus = add_edge(g4.graph, Edge(g4.label("a1"), g4.label("a4")));
    CHECK(plus == h4.graph);
}

TEST_CASE("fragment fixtures") {
    LabeledFragment f1 = fragment_f1();
    CHECK(f1.fragment.graph.order() == 8);
    CHECK(f1.fragment.graph.size() == 10);

    // F1 is the Petersen graph minus two adjacent vertices.
    Graph pet_minus = delete_vertex(delete_vertex(petersen(), 5), 0);
    CHECK(isomorphic(f1.fragment.graph, pet_minus));

    LabeledFragment f2 = fragment_f2();
    CHECK(f2.fragment.graph.order() == 12);
    CHECK(f2.fragment.graph.size() == 16);
    CHECK(f2.fragment.graph.degree(f2.fragment.x) == 2);
    CHECK(f2.fragment.graph.degree(f2.fragment.y) == 2);
    // Inner degrees straight off the defining edge list.
    std::vector<int> inner;
    for (int i = 1; i <= 10; ++i) inner.push_back(f2.fragment.graph.degree(f2.label("v" + std::to_string(i))));
    std::sort(inner.begin(), inner.end());
    CHECK(inner == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3, 4, 4});
}

TEST_CASE("chain arithmetic and preconditions") {
    Fragment f1 = fragment_f1().fragment;
    Fragment f2 = fragment_f2().fragment;
    CHECK(chain({f1, f1}).order() == 14);
    CHECK(chain({f1, f2}).order() == 18);
    CHECK(chain({f2, f2}).order() == 22);
    CHECK(chain({f1, f1, f1}).order() == 21);
    CHECK_THROWS_AS(chain({f1}), std::domain_error);
}

TEST_CASE("glue arithmetic and structure") {
    Graph k3a = complete(3);
    // Terminals must be non-adjacent: complete graphs cannot be glued.
    CHECK_THROWS_AS(glue(k3a, 0, 1, k3a, 0, 1), std::domain_error);

    Graph c5 = cycle(5);
    Graph out = glue(c5, 0, 2, c5, 1, 3);
    CHECK(out.order() == 9);  // |G| + |H| - 1
    int z = out.order() - 1, x = out.order() - 3, y = out.order() - 2;
    CHECK(out.degree(z) == 2);
    CHECK(out.has_edge(z, x));
    CHECK(out.has_edge(z, y));
    CHECK(out.has_edge(x, y));
}

TEST_CASE("line graphs") {
    CHECK(isomorphic(line_graph(complete(4)), octahedron()));
    CHECK(line_graph(path(3)) == path(2));
    for (const Graph& g : {prism(), complete_bipartite(3, 3), cube_q3()}) {
        Graph l = line_graph(g);
        CHECK(l.order() == g.size());
        CHECK(is_regular(l, 4));  // line graph of a cubic graph
    }
    CHECK(line_graph(Graph(3)).order() == 0);
}

TEST_CASE("truncation of cubic graphs") {
    Graph t = truncate_cubic(prism());
    CHECK(t.order() == 18);
    CHECK(is_regular(t, 3));
    CHECK(t.size() == 27);  // 3 * (3n) / 2
    CHECK(is_planar(t));
    CHECK(is_connected(t));

    Graph tt = truncate_cubic(complete(4));  // truncated tetrahedron
    CHECK(tt.order() == 12);
    CHECK(is_regular(tt, 3));
    CHECK(girth(tt) == 3);
    CHECK_THROWS_AS(truncate_cubic(octahedron()), std::domain_error);
}

TEST_CASE("K4 inflation") {
    Graph inf = inflate_k4(octahedron());
    CHECK(inf.order() == 24);
    CHECK(is_regular(inf, 4));
    CHECK(is_connected(inf));
    CHECK(vertex_connectivity_at_least(inf, 4));
    CHECK_THROWS_AS(inflate_k4(prism()), std::domain_error);
}
