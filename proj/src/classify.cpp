#include "histlab/classify.hpp"

#include "histlab/hist_search.hpp"

namespace histlab {

Classification classify(const Graph& g) {
    Classification c{Verdict::HistFreeNotCritical, false, std::nullopt};
    if (g.order() == 0) return c;
    c.hist = find_hist(g);
    c.k1_histonian = true;
    for (int v = 0; v < g.order() && c.k1_histonian; ++v)
        if (!has_hist(delete_vertex(g, v))) c.k1_histonian = false;
    if (c.hist)
        c.verdict = Verdict::HasHist;
    else
        c.verdict = c.k1_histonian ? Verdict::HistCritical : Verdict::HistFreeNotCritical;
    return c;
}

bool is_k1_histonian(const Graph& g) {
    if (g.order() == 0) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!has_hist(delete_vertex(g, v))) return false;
    return true;
}

bool is_hist_critical(const Graph& g) {
    if (g.order() == 0 || has_hist(g)) return false;
    return is_k1_histonian(g);
}

bool check_even_cubic_property(const Graph& g) {
    if (g.order() % 2 != 0) throw std::domain_error("graph order must be even");
    if (max_degree(g) > 3) throw std::domain_error("maximum degree must be at most 3");
    for (int v = 0; v < g.order(); ++v)
        if (has_hist(delete_vertex(g, v))) return false;
    return true;
}

namespace {

// Index of vertex t after deleting vertex v (t != v).
int shifted(int t, int v) { return t - (t > v); }

int tree_degree(const std::vector<Edge>& tree, int v) {
    int d = 0;
    for (const Edge& e : tree) d += (e.u == v) + (e.v == v);
    return d;
}

// Is there an {x,y}-excluded HIST of `host` accepted by pred?
bool exists_excluded_hist(const Graph& host, int x, int y,
                          const std::function<bool(const std::vector<Edge>&)>& pred,
                          std::optional<std::vector<Edge>>* witness = nullptr) {
    ExemptSet exempt;
    if (x >= 0) exempt.vertices.set(x);
    if (y >= 0) exempt.vertices.set(y);
    bool found = false;
    for_each_hist(host, exempt, [&](const std::vector<Edge>& t) {
        if (!pred(t)) return true;
        found = true;
        if (witness) *witness = t;
        return false;
    });
    return found;
}

}  // namespace

FragmentReport verify_fragment(const Fragment& f) {
    FragmentReport r;
    const Graph& fg = f.graph;
    const int x = f.x, y = f.y;

    // (1) an excluded HIST exists, and all of them pin x and y at degree 2.
    {
        auto hists = enumerate_excluded_hists(f);
        r.p1 = !hists.empty();
        for (const auto& t : hists)
            if (tree_degree(t, x) != 2 || tree_degree(t, y) != 2) r.p1 = false;
        if (r.p1) r.p1_witness = hists.front();
    }

    // (2) F - x has an excluded HIST whose tree degree at y is not 1, and
    // symmetrically for F - y.
    {
        Graph minus_x = delete_vertex(fg, x);
        int y_in = shifted(y, x);
        bool left = exists_excluded_hist(
            minus_x, y_in, -1,
            [&](const std::vector<Edge>& t) { return tree_degree(t, y_in) != 1; },
            &r.p2_witness_minus_x);
        Graph minus_y = delete_vertex(fg, y);
        int x_in = shifted(x, y);
        bool right = exists_excluded_hist(
            minus_y, x_in, -1,
            [&](const std::vector<Edge>& t) { return tree_degree(t, x_in) != 1; },
            &r.p2_witness_minus_y);
        r.p2 = left && right;
    }

    // (3) every F - v has an excluded HIST freeing x or y from degree 2 (a),
    // or a two-component excluded HISF separating x from y (b).
    {
        r.p3 = true;
        for (int v = 0; v < fg.order(); ++v) {
            if (v == x || v == y) continue;
            Graph minus_v = delete_vertex(fg, v);
            int xv = shifted(x, v), yv = shifted(y, v);
            FragmentReport::P3Entry entry{v, 0};
            if (exists_excluded_hist(minus_v, xv, yv, [&](const std::vector<Edge>& t) {
                    return tree_degree(t, xv) != 2 || tree_degree(t, yv) != 2;
                })) {
                entry.used_case = 'a';
            } else {
                bool has_split = false;
                for_each_split_hisf(Fragment(minus_v, xv, yv), [&](const SplitHisf&) {
                    has_split = true;
                    return false;
                });
                if (has_split) entry.used_case = 'b';
            }
            if (entry.used_case == 0) {
                r.p3 = false;
                if (!r.p3_failing_vertex) r.p3_failing_vertex = v;
            }
            r.p3_cases.push_back(entry);
        }
    }

    // (4) F itself has no two-component excluded HISF.
    {
        bool has_split = false;
        for_each_split_hisf(f, [&](const SplitHisf&) {
            has_split = true;
            return false;
        });
        r.p4 = !has_split;
    }

    return r;
}

}  // namespace histlab
