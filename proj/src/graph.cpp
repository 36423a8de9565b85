#include "histlab/graph.hpp"

#include <algorithm>

namespace histlab {

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::domain_error("delete_vertex: vertex out of range");
    Graph out(g.order() - 1);
    for (int u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        int uu = u - (u > v);
        g.neighbors(u).for_each([&](int w) {
            if (w == v || w <= u) return;
            out.add_edge(uu, w - (w > v));
        });
    }
    return out;
}

Graph add_edge(const Graph& g, Edge e) {
    Graph out = g;
    out.add_edge(e.u, e.v);
    return out;
}

Graph subdivide_edge(const Graph& g, Edge e) {
    if (e.v >= g.order() || !g.has_edge(e.u, e.v))
        throw std::domain_error("subdivide_edge: edge not present");
    Graph out = g;
    out.remove_edge(e.u, e.v);
    int w = out.push_vertex(VertexSet{});
    out.add_edge(e.u, w);
    out.add_edge(w, e.v);
    return out;
}

VertexSet reach(const Graph& g, int start) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        frontier = next.and_not(seen);
        seen |= frontier;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reach(g, 0) == g.vertices();
}

int component_count(const Graph& g) {
    VertexSet left = g.vertices();
    int c = 0;
    while (left.any()) {
        left = left.and_not(reach(g, left.first()));
        ++c;
    }
    return c;
}

std::array<std::int8_t, kMaxVertices> bfs_distances(const Graph& g, int src) {
    std::array<std::int8_t, kMaxVertices> dist;
    dist.fill(-1);
    dist[src] = 0;
    VertexSet seen = VertexSet::single(src);
    VertexSet frontier = seen;
    std::int8_t d = 0;
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        frontier = next.and_not(seen);
        seen |= frontier;
        ++d;
        frontier.for_each([&](int v) { dist[v] = d; });
    }
    return dist;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at depths (du, dw) closes a
    // cycle of length du + dw + 1. The minimum over all starts is exact.
    int best = -1;
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
        std::array<std::int16_t, kMaxVertices> dist;
        std::array<std::int16_t, kMaxVertices> parent;
        dist.fill(-1);
        parent.fill(-1);
        dist[s] = 0;
        std::array<int, kMaxVertices> queue;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            if (best > 0 && dist[v] * 2 >= best) continue;
            bool stop = false;
            g.neighbors(v).for_each([&](int w) {
                if (stop) return;
                if (dist[w] < 0) {
                    dist[w] = static_cast<std::int16_t>(dist[v] + 1);
                    parent[w] = static_cast<std::int16_t>(v);
                    queue[tail++] = w;
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                    if (best == 3) stop = true;
                }
            });
            if (stop) return 3;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool girth_at_least(const Graph& g, int k) {
    auto gi = girth(g);
    return !gi || *gi >= k;
}

int min_degree(const Graph& g) {
    int d = g.order() == 0 ? 0 : g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_complete(const Graph& g) {
    return g.size() * 2 == g.order() * (g.order() - 1);
}

bool is_acyclic(const Graph& g) {
    return g.size() + component_count(g) == g.order();
}

namespace {

struct CutVertexDfs {
    const Graph& g;
    VertexSet cuts;
    std::array<int, kMaxVertices> depth{};
    std::array<int, kMaxVertices> low{};
    std::array<std::int16_t, kMaxVertices> state{};  // 0 unseen, 1 seen

    explicit CutVertexDfs(const Graph& graph) : g(graph) {}

    void dfs(int v, int parent, int d) {
        state[v] = 1;
        depth[v] = low[v] = d;
        int children = 0;
        bool is_cut = false;
        g.neighbors(v).for_each([&](int w) {
            if (w == parent) return;
            if (state[w]) {
                low[v] = std::min(low[v], depth[w]);
                return;
            }
            ++children;
            dfs(w, v, d + 1);
            low[v] = std::min(low[v], low[w]);
            if (parent != -1 && low[w] >= depth[v]) is_cut = true;
        });
        if (parent == -1 && children > 1) is_cut = true;
        if (is_cut) cuts.set(v);
    }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
    CutVertexDfs dfs(g);
    for (int v = 0; v < g.order(); ++v)
        if (!dfs.state[v]) dfs.dfs(v, -1, 0);
    return dfs.cuts;
}

namespace {

bool connected_after_removal(const Graph& g, const VertexSet& removed) {
    VertexSet alive = g.vertices().and_not(removed);
    int start = alive.first();
    if (start < 0) return true;  // nothing left counts as connected
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= alive;
        frontier = next.and_not(seen);
        seen |= frontier;
    }
    return seen == alive;
}

bool exists_disconnecting_set(const Graph& g, int size, VertexSet chosen, int next) {
    if (size == 0) return !connected_after_removal(g, chosen);
    for (int v = next; v <= g.order() - size; ++v) {
        VertexSet c = chosen;
        c.set(v);
        if (exists_disconnecting_set(g, size - 1, c, v + 1)) return true;
    }
    return false;
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.order();
    if (n == 0) return false;
    if (is_complete(g)) return k <= n - 1;
    if (!is_connected(g)) return false;
    if (n <= k) return false;  // non-complete graphs have connectivity <= n - 2
    // n >= k + 1 and g is not complete: a cut of size < k exists iff some
    // (k-1)-subset disconnects (pad smaller cuts with isolated leftovers).
    return !exists_disconnecting_set(g, k - 1, VertexSet{}, 0);
}

}  // namespace histlab
