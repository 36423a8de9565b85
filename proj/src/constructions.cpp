#include "histlab/constructions.hpp"

#include <algorithm>

namespace histlab {

LabeledConstruction antiprism(int k) {
    if (k < 3) throw std::domain_error("antiprism requires k >= 3");
    if (2 * k > kMaxVertices) throw std::domain_error("antiprism too large");
    LabeledConstruction c{Graph(2 * k), {}};
    for (int i = 0; i < k; ++i) {
        c.labels["v" + std::to_string(i)] = i;
        c.labels["w" + std::to_string(i)] = k + i;
    }
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        c.graph.add_edge(i, j);              // outer cycle
        c.graph.add_edge(k + i, k + j);      // inner cycle
        c.graph.add_edge(i, k + i);          // rim
        c.graph.add_edge(i, k + j);
    }
    return c;
}

LabeledConstruction g_k(int k) {
    if (k < 3) throw std::domain_error("g_k requires k >= 3");
    if (3 * k + 1 > kMaxVertices) throw std::domain_error("g_k too large");
    LabeledConstruction c{Graph(3 * k + 1), {}};
    auto a = [&](int i) { return i - 1; };          // a1..ak -> 0..k-1
    auto b = [&](int i) { return k + i - 1; };      // b1..bk -> k..2k-1
    auto cc = [&](int i) { return 2 * k + i - 1; }; // c1..c(k-1) -> 2k..3k-2
    const int x = 3 * k - 1, y = 3 * k;
    for (int i = 1; i <= k; ++i) {
        c.labels["a" + std::to_string(i)] = a(i);
        c.labels["b" + std::to_string(i)] = b(i);
    }
    for (int i = 1; i <= k - 1; ++i) c.labels["c" + std::to_string(i)] = cc(i);
    c.labels["x"] = x;
    c.labels["y"] = y;
    for (int i = 1; i <= k - 1; ++i) {
        c.graph.add_edge(a(i), a(i + 1));
        c.graph.add_edge(a(i), cc(i));
        c.graph.add_edge(a(i + 1), cc(i));
        c.graph.add_edge(b(i), b(i + 1));
        c.graph.add_edge(b(i), cc(i));
        c.graph.add_edge(b(i + 1), cc(i));
    }
    c.graph.add_edge(a(1), x);
    c.graph.add_edge(a(k), x);
    c.graph.add_edge(b(1), y);
    c.graph.add_edge(b(k), y);
    c.graph.add_edge(x, y);
    return c;
}

LabeledConstruction h_k(int k) {
    LabeledConstruction c = g_k(k);
    c.graph.add_edge(c.label("a1"), c.label("a" + std::to_string(k)));
    return c;
}

namespace {

LabeledFragment make_fragment(int n_inner, const std::vector<std::pair<std::string, std::string>>& edges) {
    // v1..vN -> 0..N-1, then x, y.
    std::map<std::string, int> labels;
    for (int i = 1; i <= n_inner; ++i) labels["v" + std::to_string(i)] = i - 1;
    labels["x"] = n_inner;
    labels["y"] = n_inner + 1;
    Graph g(n_inner + 2);
    for (const auto& [s, t] : edges) g.add_edge(labels.at(s), labels.at(t));
    return LabeledFragment{Fragment(g, labels.at("x"), labels.at("y")), labels};
}

}  // namespace

LabeledFragment fragment_f1() {
    return make_fragment(6, {
        {"x", "v3"}, {"x", "v6"}, {"y", "v1"}, {"y", "v4"},
        {"v1", "v2"}, {"v1", "v6"}, {"v2", "v3"}, {"v3", "v4"},
        {"v4", "v5"}, {"v5", "v6"},
    });
}

LabeledFragment fragment_f2() {
    return make_fragment(10, {
        {"x", "v1"}, {"x", "v8"}, {"y", "v6"}, {"y", "v9"},
        {"v1", "v2"}, {"v1", "v6"}, {"v1", "v7"}, {"v2", "v3"},
        {"v3", "v4"}, {"v3", "v8"}, {"v4", "v5"}, {"v4", "v9"},
        {"v5", "v6"}, {"v6", "v10"}, {"v7", "v9"}, {"v8", "v10"},
    });
}

Graph chain(const std::vector<Fragment>& fragments) {
    const int k = static_cast<int>(fragments.size());
    if (k < 2) throw std::domain_error("chain requires at least two fragments");
    int order = k;  // the k merged terminal vertices
    for (const Fragment& f : fragments) order += f.graph.order() - 2;
    if (order > kMaxVertices) throw std::domain_error("chain too large");

    // Merged vertex u_i carries x of fragment i and y of fragment i-1.
    Graph out(order);
    int next_interior = k;
    for (int i = 0; i < k; ++i) {
        const Fragment& f = fragments[i];
        std::vector<int> map(f.graph.order(), -1);
        map[f.x] = i;
        map[f.y] = (i + 1) % k;
        for (int v = 0; v < f.graph.order(); ++v)
            if (map[v] < 0) map[v] = next_interior++;
        for (const Edge& e : f.graph.edges()) {
            if (out.has_edge(map[e.u], map[e.v]))
                throw std::domain_error("chain: identification creates a parallel edge");
            out.add_edge(map[e.u], map[e.v]);
        }
    }
    return out;
}

Graph glue(const Graph& g, int xg, int yg, const Graph& h, int xh, int yh) {
    if (xg == yg || xg < 0 || yg < 0 || xg >= g.order() || yg >= g.order())
        throw std::domain_error("glue: bad terminals for first graph");
    if (xh == yh || xh < 0 || yh < 0 || xh >= h.order() || yh >= h.order())
        throw std::domain_error("glue: bad terminals for second graph");
    if (g.has_edge(xg, yg) || h.has_edge(xh, yh))
        throw std::domain_error("glue: terminals must be non-adjacent");
    const int order = g.order() + h.order() - 1;
    if (order > kMaxVertices) throw std::domain_error("glue too large");
    const int x = order - 3, y = order - 2, z = order - 1;

    Graph out(order);
    auto wire = [&](const Graph& src, int xs, int ys, int base) {
        std::vector<int> map(src.order(), -1);
        map[xs] = x;
        map[ys] = y;
        int next = base;
        for (int v = 0; v < src.order(); ++v)
            if (map[v] < 0) map[v] = next++;
        for (const Edge& e : src.edges()) out.add_edge(map[e.u], map[e.v]);
        return next;
    };
    int after_g = wire(g, xg, yg, 0);
    wire(h, xh, yh, after_g);
    out.add_edge(z, x);
    out.add_edge(z, y);
    out.add_edge(x, y);
    return out;
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end());
    const int m = static_cast<int>(edges.size());
    if (m > kMaxVertices) throw std::domain_error("line graph too large");
    Graph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.add_edge(i, j);
        }
    return out;
}

namespace {

// For each vertex, its incident edges in ascending neighbor order; corner j
// of the replacement clique carries the j-th one.
std::vector<std::vector<int>> corner_assignment(const Graph& g) {
    std::vector<std::vector<int>> nbrs(g.order());
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int w) { nbrs[v].push_back(w); });
    return nbrs;
}

Graph clique_inflation(const Graph& g, int r) {
    const int n = g.order();
    if (!is_regular(g, r))
        throw std::domain_error("inflation requires a " + std::to_string(r) + "-regular graph");
    if (n * (r + 1) > kMaxVertices) throw std::domain_error("inflation too large");
    auto nbrs = corner_assignment(g);
    Graph out(n * r);
    auto corner = [&](int v, int w) {
        auto& list = nbrs[v];
        int j = static_cast<int>(std::lower_bound(list.begin(), list.end(), w) - list.begin());
        return v * r + j;
    };
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) out.add_edge(v * r + i, v * r + j);
    for (const Edge& e : g.edges()) out.add_edge(corner(e.u, e.v), corner(e.v, e.u));
    return out;
}

}  // namespace

Graph truncate_cubic(const Graph& g) { return clique_inflation(g, 3); }

Graph inflate_k4(const Graph& g) { return clique_inflation(g, 4); }

}  // namespace histlab
