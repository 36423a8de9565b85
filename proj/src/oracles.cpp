#include "histlab/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace histlab {

// ---------------------------------------------------------------- Kirchhoff

BigCount kirchhoff_count(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (n == 1) return 1;
    const int d = n - 1;
    // Laplacian principal minor (drop the last row/column).
    std::vector<std::vector<BigCount>> a(d, std::vector<BigCount>(d, 0));
    for (int i = 0; i < d; ++i) {
        a[i][i] = g.degree(i);
        g.neighbors(i).for_each([&](int j) {
            if (j < d) a[i][j] = -1;
        });
    }
    // Bareiss fraction-free elimination; divisions are exact.
    BigCount prev = 1;
    int sign = 1;
    for (int k = 0; k < d; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;  // singular: disconnected graph
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    BigCount det = a[d - 1][d - 1];
    if (sign < 0) det = -det;
    assert(det >= 0);
    return det;
}

// ------------------------------------------------------- exchange algorithm

namespace {

enum Mark : std::uint8_t { kUnmarked, kIn, kOut };

// Spanning-tree enumeration by fundamental-cycle exchange. Start from a DFS
// tree; pick the first unmarked non-tree edge e, walk its cycle in T + e and
// branch on which tree edge leaves. "In" edges stay in every tree of the
// branch, "out" edges in none, which is what the degree pruning reads.
struct ExchangeEngine {
    const Graph& g;
    int n, m;
    bool hist_mode;
    std::vector<Edge> edges;
    std::vector<int> eid;  // n*n edge-id lookup
    std::vector<Mark> mark;
    std::vector<char> in_tree;
    std::array<VertexSet, kMaxVertices> tadj{};
    std::array<std::uint8_t, kMaxVertices> tdeg{};
    std::array<std::uint8_t, kMaxVertices> in_deg{}, out_deg{}, deg{};
    BigCount found = 0;

    ExchangeEngine(const Graph& graph, bool hist)
        : g(graph), n(graph.order()), m(graph.size()), hist_mode(hist) {
        edges = g.edges();
        std::sort(edges.begin(), edges.end());
        eid.assign(n * n, -1);
        for (int i = 0; i < m; ++i) {
            eid[edges[i].u * n + edges[i].v] = i;
            eid[edges[i].v * n + edges[i].u] = i;
        }
        mark.assign(m, kUnmarked);
        in_tree.assign(m, 0);
        for (int v = 0; v < n; ++v) deg[v] = static_cast<std::uint8_t>(g.degree(v));
    }

    void set_mark(int e, Mark to) {
        Mark from = mark[e];
        auto bump = [&](Mark mk, int delta) {
            if (mk == kIn) {
                in_deg[edges[e].u] = static_cast<std::uint8_t>(in_deg[edges[e].u] + delta);
                in_deg[edges[e].v] = static_cast<std::uint8_t>(in_deg[edges[e].v] + delta);
            } else if (mk == kOut) {
                out_deg[edges[e].u] = static_cast<std::uint8_t>(out_deg[edges[e].u] + delta);
                out_deg[edges[e].v] = static_cast<std::uint8_t>(out_deg[edges[e].v] + delta);
            }
        };
        bump(from, -1);
        bump(to, +1);
        mark[e] = to;
    }

    void tree_insert(int e) {
        in_tree[e] = 1;
        tadj[edges[e].u].set(edges[e].v);
        tadj[edges[e].v].set(edges[e].u);
        ++tdeg[edges[e].u];
        ++tdeg[edges[e].v];
    }
    void tree_erase(int e) {
        in_tree[e] = 0;
        tadj[edges[e].u].reset(edges[e].v);
        tadj[edges[e].v].reset(edges[e].u);
        --tdeg[edges[e].u];
        --tdeg[edges[e].v];
    }

    // Builds the DFS spanning tree from vertex 0, ascending neighbor order.
    void build_initial_tree() {
        std::array<char, kMaxVertices> seen{};
        seen[0] = 1;
        dfs(0, seen);
    }

    void dfs(int v, std::array<char, kMaxVertices>& seen) {
        g.neighbors(v).for_each([&](int w) {
            if (seen[w]) return;
            seen[w] = 1;
            tree_insert(eid[v * n + w]);
            dfs(w, seen);
        });
    }

    // Tree path from u to v as edge ids, ordered from u's side.
    std::vector<int> tree_path(int u, int v) const {
        std::array<std::int16_t, kMaxVertices> parent;
        parent.fill(-2);
        parent[u] = -1;
        std::array<int, kMaxVertices> queue;
        int head = 0, tail = 0;
        queue[tail++] = u;
        while (head < tail && parent[v] == -2) {
            int x = queue[head++];
            tadj[x].for_each([&](int y) {
                if (parent[y] == -2) {
                    parent[y] = static_cast<std::int16_t>(x);
                    queue[tail++] = y;
                }
            });
        }
        std::vector<int> path;
        for (int x = v; parent[x] != -1; x = parent[x]) path.push_back(eid[x * n + parent[x]]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    void count_current() {
        if (hist_mode)
            for (int v = 0; v < n; ++v)
                if (tdeg[v] == 2) return;
        ++found;
    }

    bool prune() const {
        if (!hist_mode) return false;
        for (int v = 0; v < n; ++v)
            if (in_deg[v] == 2 && out_deg[v] == deg[v] - 2) return true;
        return false;
    }

    void recurse() {
        if (prune()) return;
        int e = -1;
        for (int i = 0; i < m; ++i)
            if (!in_tree[i] && mark[i] == kUnmarked) {
                e = i;
                break;
            }
        if (e < 0) return;
        std::vector<int> cycle = tree_path(edges[e].u, edges[e].v);
        set_mark(e, kIn);
        std::vector<int> marked_in;
        for (int f : cycle) {
            if (mark[f] == kIn) continue;
            set_mark(f, kOut);
            tree_erase(f);
            tree_insert(e);
            count_current();
            recurse();
            tree_erase(e);
            tree_insert(f);
            set_mark(f, kIn);
            marked_in.push_back(f);
        }
        for (int f : marked_in) set_mark(f, kUnmarked);
        set_mark(e, kOut);
        recurse();
        set_mark(e, kUnmarked);
    }

    BigCount run() {
        build_initial_tree();
        count_current();
        recurse();
        return found;
    }
};

}  // namespace

BigCount count_hists_exchange(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.order() == 1) return 1;
    if (!is_connected(g)) return 0;
    return ExchangeEngine(g, true).run();
}

BigCount exchange_spanning_trees(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.order() == 1) return 1;
    if (!is_connected(g)) return 0;
    return ExchangeEngine(g, false).run();
}

// ------------------------------------------------------------- brute force

namespace {

struct BruteDsu {
    std::array<int, kMaxVertices> parent;
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    }
};

}  // namespace

BigCount brute_force_hists(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::domain_error("brute_force_hists is guarded to n <= 12");
    if (n == 0) return 0;
    std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int need = n - 1;
    if (need > m) return 0;
    std::vector<int> pick(need);
    BigCount count = 0;
    BruteDsu dsu;
    auto test_subset = [&]() {
        dsu.init(n);
        std::array<int, kMaxVertices> deg{};
        for (int i : pick) {
            int ru = dsu.find(edges[i].u), rv = dsu.find(edges[i].v);
            if (ru == rv) return;  // cycle
            dsu.parent[ru] = rv;
            ++deg[edges[i].u];
            ++deg[edges[i].v];
        }
        for (int v = 0; v < n; ++v)
            if (deg[v] == 2) return;
        ++count;
    };
    // All (n-1)-subsets of the edge list.
    auto rec = [&](auto&& self, int start, int slot) -> void {
        if (slot == need) {
            test_subset();
            return;
        }
        for (int i = start; i <= m - (need - slot); ++i) {
            pick[slot] = i;
            self(self, i + 1, slot + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// -------------------------------------------------------------- DP oracles

bool ham_path_exists(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::domain_error("ham_path_exists is guarded to n <= 24");
    if (n == 0) return false;
    if (n == 1) return true;
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v) {
        std::uint32_t row = 0;
        g.neighbors(v).for_each([&](int w) { row |= std::uint32_t{1} << w; });
        adj[v] = row;
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        if (mask == full) return true;
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return dp[full] != 0;
}

namespace {

// Edge count, connectivity and acyclicity of the subgraph induced by mask.
struct InducedShape {
    int vertices;
    int edges;
    bool connected;
};

InducedShape induced_shape(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    InducedShape s{std::popcount(mask), 0, false};
    if (!mask) return s;
    for (std::uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        s.edges += std::popcount(adj[v] & mask);
    }
    s.edges /= 2;
    std::uint32_t seen = mask & (~mask + 1);  // lowest bit
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & mask;
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    s.connected = (seen == mask);
    return s;
}

std::vector<std::uint32_t> mask_adjacency(const Graph& g) {
    std::vector<std::uint32_t> adj(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t row = 0;
        g.neighbors(v).for_each([&](int w) { row |= std::uint32_t{1} << w; });
        adj[v] = row;
    }
    return adj;
}

bool forest_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    // Union-find over members; abort on the first cycle edge.
    int id[32];
    int verts[32];
    int k = 0;
    for (std::uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        id[v] = v;
        verts[k++] = v;
    }
    auto find = [&](int x) {
        while (id[x] != x) x = id[x];
        return x;
    };
    for (int i = 0; i < k; ++i) {
        int v = verts[i];
        std::uint32_t nb = adj[v] & mask;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w <= v) continue;
            int rv = find(v), rw = find(w);
            if (rv == rw) return false;
            id[rv] = rw;
        }
    }
    return true;
}

}  // namespace

int max_induced_forest(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::domain_error("max_induced_forest is guarded to n <= 24");
    if (n == 0) return 0;
    auto adj = mask_adjacency(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    int best = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) <= best) continue;
        if (forest_mask(adj, mask)) best = std::popcount(mask);
    }
    return best;
}

namespace {

BigCount count_one_end_induced(const Graph& g, int order_mod_4, bool unicyclic) {
    const int n = g.order();
    if (!is_regular(g, 3)) throw std::domain_error("graph must be cubic");
    if (!is_connected(g)) throw std::domain_error("graph must be connected");
    if (n % 4 != order_mod_4)
        throw std::domain_error("order must be " + std::string(order_mod_4 ? "4k+2" : "4k"));
    if (n > 20) throw std::domain_error("induced-subgraph search is guarded to n <= 20");
    auto adj = mask_adjacency(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    BigCount count = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // The complement must be independent: every edge has an end in mask.
        std::uint32_t outside = full & ~mask;
        bool indep = true;
        for (std::uint32_t rest = outside; rest && indep;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & outside) indep = false;
        }
        if (!indep) continue;
        InducedShape s = induced_shape(adj, mask);
        if (!s.connected) continue;
        int want = unicyclic ? s.vertices : s.vertices - 1;
        if (s.edges == want) ++count;
    }
    return count;
}

}  // namespace

BigCount count_one_end_induced_trees(const Graph& g) {
    return count_one_end_induced(g, 2, false);
}

BigCount count_one_end_induced_unicyclics(const Graph& g) {
    return count_one_end_induced(g, 0, true);
}

}  // namespace histlab
