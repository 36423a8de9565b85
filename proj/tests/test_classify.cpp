#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "histlab/canon.hpp"
#include "histlab/classify.hpp"
#include "histlab/constructions.hpp"
#include "histlab/generate.hpp"
#include "histlab/hist_search.hpp"
#include "test_util.hpp"

using namespace histlab;
using namespace histlab::test;

TEST_CASE("classify fixed cases") {
    Classification k3 = classify(complete(3));
    CHECK(k3.verdict == Verdict::HistCritical);
    CHECK(k3.k1_histonian);

    Classification c4 = classify(cycle(4));
    CHECK(c4.verdict == Verdict::HistFreeNotCritical);
    CHECK(!c4.k1_histonian);

    Classification oct = classify(octahedron());
    CHECK(oct.verdict == Verdict::HasHist);
    REQUIRE(oct.hist.has_value());
    CHECK(is_valid_hist(octahedron(), *oct.hist));

    Classification h4 = classify(h_k(4).graph);
    CHECK(h4.verdict == Verdict::HistCritical);
    CHECK(h4.k1_histonian);
}

TEST_CASE("HistCritical implies K1-histonian by construction") {
    Classification c = classify(complete(3));
    CHECK((c.verdict != Verdict::HistCritical || c.k1_histonian));
    Classification d = classify(cycle(5));
    CHECK((d.verdict != Verdict::HistCritical || d.k1_histonian));
}

TEST_CASE("classify degenerate inputs") {
    Classification empty = classify(Graph(0));
    CHECK(empty.verdict == Verdict::HistFreeNotCritical);
    Classification k1 = classify(Graph(1));
    CHECK(k1.verdict == Verdict::HasHist);
    CHECK(!k1.k1_histonian);  // deleting the vertex leaves nothing to span
}

TEST_CASE("classify is invariant under relabeling") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 1000; ++rep) {
        int n = 3 + rep % 5;
        Graph g = random_graph(n, 0.35 + 0.05 * (rep % 7), rng);
        Graph h = apply_permutation(g, random_permutation(n, rng));
        Classification cg = classify(g), ch = classify(h);
        CHECK(cg.verdict == ch.verdict);
        CHECK(cg.k1_histonian == ch.k1_histonian);
    }
}

TEST_CASE("HIST-critical graphs are 2-connected") {
    // Sweep all connected graphs of orders up to 8; every critical one must
    // be 2-connected.
    for (int n = 3; n <= 8; ++n) {
        GenConstraints c;
        c.order = n;
        c.connectivity_min = 1;
        generate(c, [&](const Graph& g) {
            if (is_hist_critical(g)) CHECK(vertex_connectivity_at_least(g, 2));
            return true;
        });
    }
}

TEST_CASE("even cubic property probe") {
    CHECK(check_even_cubic_property(complete(4)));
    CHECK(check_even_cubic_property(petersen()));
    CHECK(check_even_cubic_property(prism()));
    CHECK(check_even_cubic_property(cube_q3()));
    CHECK_THROWS_AS(check_even_cubic_property(cycle(5)), std::domain_error);      // odd order
    CHECK_THROWS_AS(check_even_cubic_property(octahedron()), std::domain_error);  // degree 4
}

TEST_CASE("fragment type invariants") {
    Graph p4 = path(4);
    CHECK_THROWS_AS(Fragment(p4, 0, 1), std::domain_error);  // adjacent terminals
    CHECK_THROWS_AS(Fragment(p4, 2, 2), std::domain_error);
    CHECK_THROWS_AS(Fragment(p4, 0, 9), std::domain_error);
    Fragment ok(p4, 0, 3);
    CHECK(ok.x == 0);
}

TEST_CASE("verify_fragment on F1 and F2") {
    FragmentReport r1 = verify_fragment(fragment_f1().fragment);
    CHECK(r1.p1);
    CHECK(r1.p2);
    CHECK(r1.p3);
    CHECK(r1.p4);
    CHECK(r1.all());
    REQUIRE(r1.p1_witness.has_value());
    CHECK(is_valid_hist(fragment_f1().fragment.graph, *r1.p1_witness,
                        ExemptSet::of({fragment_f1().fragment.x, fragment_f1().fragment.y})));
    for (const auto& entry : r1.p3_cases) CHECK(entry.used_case != 0);

    FragmentReport r2 = verify_fragment(fragment_f2().fragment);
    CHECK(r2.all());
}

TEST_CASE("verify_fragment rejects a bare path") {
    Graph p3 = path(3);
    FragmentReport r = verify_fragment(Fragment(p3, 0, 2));
    CHECK(!r.p1);  // the middle vertex would be a 2-vertex
}

TEST_CASE("verify_fragment on a disconnected graph reports p1 false") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    FragmentReport r = verify_fragment(Fragment(g, 0, 4));
    CHECK(!r.p1);
}
