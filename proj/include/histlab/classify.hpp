#pragma once

#include <optional>
#include <vector>

#include "histlab/fragment.hpp"
#include "histlab/graph.hpp"

namespace histlab {

enum class Verdict { HasHist, HistFreeNotCritical, HistCritical };

struct Classification {
    Verdict verdict;
    bool k1_histonian;  // every vertex-deleted subgraph has a HIST
    std::optional<std::vector<Edge>> hist;  // witness when verdict == HasHist

    bool hist_free() const { return verdict != Verdict::HasHist; }
};

Classification classify(const Graph& g);

// classify(g).verdict == HistCritical, but organized so the common case
// (a HIST exists) exits before any vertex-deleted searches run.
bool is_hist_critical(const Graph& g);

// Every vertex-deleted subgraph has a HIST.
bool is_k1_histonian(const Graph& g);

// Theorem probe: g must have even order and max degree <= 3; returns true
// iff every vertex-deleted subgraph is HIST-free (which the parity argument
// says is always the case).
bool check_even_cubic_property(const Graph& g);

// Fragment property report. Evidence: witnesses for passing properties, the
// failing vertex for property 3.
struct FragmentReport {
    bool p1 = false;
    bool p2 = false;
    bool p3 = false;
    bool p4 = false;

    bool all() const { return p1 && p2 && p3 && p4; }

    std::optional<std::vector<Edge>> p1_witness;  // one excluded HIST
    std::optional<std::vector<Edge>> p2_witness_minus_x;
    std::optional<std::vector<Edge>> p2_witness_minus_y;

    // How each non-terminal vertex satisfied property 3: 'a' or 'b', or 0 on
    // failure. Indexed by vertex id in the fragment graph.
    struct P3Entry {
        int vertex = -1;
        char used_case = 0;
    };
    std::vector<P3Entry> p3_cases;
    std::optional<int> p3_failing_vertex;
};

// Checks fragment properties (1)-(4). Degrees of x and y in property 2 are
// tree degrees. A disconnected fragment graph reports p1 = false.
FragmentReport verify_fragment(const Fragment& f);

}  // namespace histlab
