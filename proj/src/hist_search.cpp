#include "histlab/hist_search.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

namespace histlab {

namespace {

// Union-find over forest components, with undo (no path compression so
// rollback stays exact).
struct Dsu {
    std::array<std::int16_t, kMaxVertices> parent;
    std::array<std::int16_t, kMaxVertices> size;

    void init(int n) {
        for (int i = 0; i < n; ++i) {
            parent[i] = static_cast<std::int16_t>(i);
            size[i] = 1;
        }
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    // Returns the root that got attached; caller must pass it back to undo().
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        assert(a != b);
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = static_cast<std::int16_t>(a);
        size[a] = static_cast<std::int16_t>(size[a] + size[b]);
        return b;
    }
    void undo(int attached) {
        int root = parent[attached];
        size[root] = static_cast<std::int16_t>(size[root] - size[attached]);
        parent[attached] = static_cast<std::int16_t>(attached);
    }
};

enum class Mode { Tree, SplitForest };

// The branch-and-bound: grow an acyclic edge set T while forbidding edges
// into G'. At each node pick the vertex v with the fewest available incident
// edges (deg - d_G' - d_T, nonzero), then its available neighbor w with the
// same minimal quantity; branch on forbidding vw first, then on adding it to
// T when that keeps T acyclic. Ties break to the lowest vertex index so the
// enumeration order is reproducible.
struct Engine {
    const Graph* g = nullptr;
    int n = 0;
    VertexSet exempt;
    Mode mode = Mode::Tree;
    bool prune_enabled = true;
    bool degree_filter = true;
    int target = 0;
    int sx = -1, sy = -1;  // split mode: terminals that must stay separated
    std::optional<std::uint64_t> stop_after;
    const std::function<bool(const std::vector<Edge>&)>* tree_cb = nullptr;
    const std::function<bool(const SplitHisf&)>* split_cb = nullptr;

    BigCount found = 0;
    bool stopped = false;

    std::array<VertexSet, kMaxVertices> forb;
    std::array<VertexSet, kMaxVertices> tadj;
    std::array<std::uint8_t, kMaxVertices> deg;
    std::array<std::uint8_t, kMaxVertices> d_t;
    std::array<std::uint8_t, kMaxVertices> d_gp;
    VertexSet tree_vertices;
    int tree_edges = 0;
    int avail_edges = 0;
    Dsu dsu;
    std::vector<Edge> tstack;

    void init(const Graph& graph, const ExemptSet& ex) {
        g = &graph;
        n = graph.order();
        exempt = ex.vertices;
        mode = Mode::Tree;
        prune_enabled = true;
        degree_filter = true;
        sx = sy = -1;
        stop_after.reset();
        tree_cb = nullptr;
        split_cb = nullptr;
        found = 0;
        stopped = false;
        for (int v = 0; v < n; ++v) {
            forb[v] = VertexSet{};
            tadj[v] = VertexSet{};
            deg[v] = static_cast<std::uint8_t>(graph.degree(v));
            d_t[v] = 0;
            d_gp[v] = 0;
        }
        tree_vertices = VertexSet{};
        tree_edges = 0;
        avail_edges = graph.size();
        dsu.init(n);
        tstack.clear();
        tstack.reserve(n);
    }

#ifndef NDEBUG
    void validate_state() const {
        for (int v = 0; v < n; ++v) {
            assert(d_t[v] == tadj[v].count());
            assert(d_gp[v] == forb[v].count());
            assert(!(tadj[v] & forb[v]).any());
            assert(d_t[v] + d_gp[v] <= deg[v]);
        }
    }
#endif

    bool hit_stop() const { return stop_after && found >= *stop_after; }

    bool prune() const {
        for (int v = 0; v < n; ++v) {
            int open = deg[v] - d_gp[v];
            if (open == 0) return true;  // v can never reach tree degree >= 1
            if (open == 2 && d_t[v] == 2 && !exempt.test(v)) return true;  // 2-vertex locked in
        }
        return false;
    }

    int pick_vertex() const {
        int best = -1;
        int best_avail = 1 << 30;
        for (int v = 0; v < n; ++v) {
            int a = deg[v] - d_gp[v] - d_t[v];
            if (a > 0 && a < best_avail) {
                best_avail = a;
                best = v;
            }
        }
        return best;
    }

    int pick_neighbor(int v) const {
        VertexSet cand = g->neighbors(v).and_not(forb[v] | tadj[v]);
        int best = -1;
        int best_avail = 1 << 30;
        cand.for_each([&](int w) {
            int a = deg[w] - d_gp[w] - d_t[w];
            if (a < best_avail) {
                best_avail = a;
                best = w;
            }
        });
        return best;
    }

    void complete() {
        if (degree_filter)
            for (int v = 0; v < n; ++v)
                if (d_t[v] == 2 && !exempt.test(v)) return;
        if (mode == Mode::SplitForest) {
            for (int v = 0; v < n; ++v)
                if (d_t[v] == 0) return;  // a singleton component
            assert(dsu.find(sx) != dsu.find(sy));
        }
        ++found;
        if (tree_cb) {
            std::vector<Edge> edges = tstack;
            std::sort(edges.begin(), edges.end());
            if (!(*tree_cb)(edges)) stopped = true;
        } else if (split_cb) {
            SplitHisf out;
            int rx = dsu.find(sx);
            for (const Edge& e : tstack)
                (dsu.find(e.u) == rx ? out.first : out.second).push_back(e);
            std::sort(out.first.begin(), out.first.end());
            std::sort(out.second.begin(), out.second.end());
            if (!(*split_cb)(out)) stopped = true;
        }
    }

    void recurse() {
        if (stopped || hit_stop()) return;
#ifndef NDEBUG
        validate_state();
#endif
        if (tree_edges == target) {
            complete();
            return;
        }
        if (prune_enabled) {
            if (avail_edges < target - tree_edges) return;
            if (prune()) return;
        }
        int v = pick_vertex();
        if (v < 0) return;
        int w = pick_neighbor(v);
        assert(w >= 0);

        // Branch 1: forbid vw.
        forb[v].set(w);
        forb[w].set(v);
        ++d_gp[v];
        ++d_gp[w];
        --avail_edges;
        recurse();
        ++avail_edges;
        --d_gp[v];
        --d_gp[w];
        forb[v].reset(w);
        forb[w].reset(v);

        if (stopped || hit_stop()) return;

        // Branch 2: put vw into T when its endpoints lie in distinct forest
        // components (anything else would close a cycle).
        int rv = dsu.find(v), rw = dsu.find(w);
        if (rv == rw) return;
        if (mode == Mode::SplitForest) {
            int rx = dsu.find(sx), ry = dsu.find(sy);
            if ((rv == rx && rw == ry) || (rv == ry && rw == rx)) return;
        }
        tadj[v].set(w);
        tadj[w].set(v);
        ++d_t[v];
        ++d_t[w];
        --avail_edges;
        tree_vertices.set(v);
        tree_vertices.set(w);
        int attached = dsu.unite(v, w);
        ++tree_edges;
        tstack.emplace_back(v, w);
        recurse();
        tstack.pop_back();
        --tree_edges;
        dsu.undo(attached);
        ++avail_edges;
        --d_t[v];
        --d_t[w];
        if (d_t[v] == 0) tree_vertices.reset(v);
        if (d_t[w] == 0) tree_vertices.reset(w);
        tadj[v].reset(w);
        tadj[w].reset(v);
    }
};

// One scratch engine per thread; falls back to a fresh one if a callback
// starts a nested search.
struct ScratchSlot {
    Engine engine;
    bool busy = false;
};

ScratchSlot& scratch() {
    thread_local ScratchSlot slot;
    return slot;
}

struct SlotLease {
    ScratchSlot* slot = nullptr;
    ~SlotLease() {
        if (slot) slot->busy = false;
    }
};

template <typename Setup>
BigCount run_engine(const Graph& g, const ExemptSet& exempt, Setup&& setup) {
    ScratchSlot& slot = scratch();
    std::unique_ptr<Engine> backup;
    SlotLease lease;
    Engine* e;
    if (!slot.busy) {
        slot.busy = true;
        lease.slot = &slot;
        e = &slot.engine;
    } else {
        backup = std::make_unique<Engine>();
        e = backup.get();
    }
    e->init(g, exempt);
    setup(*e);
    e->recurse();
    return e->found;
}

}  // namespace

BigCount count_hists(const Graph& g, const ExemptSet& exempt,
                     std::optional<std::uint64_t> stop_after) {
    if (g.order() == 0) return 0;
    if (stop_after && *stop_after == 0) return 0;
    if (g.order() == 1) return 1;
    if (!is_connected(g)) return 0;
    return run_engine(g, exempt, [&](Engine& e) {
        e.target = g.order() - 1;
        e.stop_after = stop_after;
    });
}

bool has_hist(const Graph& g, const ExemptSet& exempt) {
    return count_hists(g, exempt, 1) > 0;
}

void for_each_hist(const Graph& g, const ExemptSet& exempt,
                   const std::function<bool(const std::vector<Edge>&)>& visit) {
    if (g.order() == 0 || !is_connected(g)) return;
    if (g.order() == 1) {
        visit({});
        return;
    }
    run_engine(g, exempt, [&](Engine& e) {
        e.target = g.order() - 1;
        e.tree_cb = &visit;
    });
}

std::optional<std::vector<Edge>> find_hist(const Graph& g, const ExemptSet& exempt) {
    if (g.order() == 0) return std::nullopt;
    std::optional<std::vector<Edge>> out;
    std::function<bool(const std::vector<Edge>&)> grab =
        [&](const std::vector<Edge>& t) {
            out = t;
            return false;
        };
    for_each_hist(g, exempt, grab);
    if (out && !is_valid_hist(g, *out, exempt))
        throw std::logic_error("find_hist produced an invalid witness");
    return out;
}

std::vector<std::vector<Edge>> enumerate_excluded_hists(const Fragment& f) {
    std::vector<std::vector<Edge>> out;
    ExemptSet exempt = ExemptSet::of({f.x, f.y});
    for_each_hist(f.graph, exempt, [&](const std::vector<Edge>& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void for_each_split_hisf(const Fragment& f,
                         const std::function<bool(const SplitHisf&)>& visit) {
    if (f.graph.order() < 4) return;  // two components on >= 2 vertices each
    run_engine(f.graph, ExemptSet::of({f.x, f.y}), [&](Engine& e) {
        e.mode = Mode::SplitForest;
        e.target = f.graph.order() - 2;
        e.sx = f.x;
        e.sy = f.y;
        e.split_cb = &visit;
    });
}

std::vector<SplitHisf> enumerate_split_hisfs(const Fragment& f) {
    std::vector<SplitHisf> out;
    for_each_split_hisf(f, [&](const SplitHisf& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

BigCount spanning_trees_visited(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.order() == 1) return 1;
    if (!is_connected(g)) return 0;
    return run_engine(g, ExemptSet{}, [&](Engine& e) {
        e.target = g.order() - 1;
        e.prune_enabled = false;
        e.degree_filter = false;
    });
}

bool is_valid_hist(const Graph& g, const std::vector<Edge>& tree, const ExemptSet& exempt) {
    const int n = g.order();
    if (static_cast<int>(tree.size()) != n - 1) return false;
    Dsu dsu;
    dsu.init(n);
    std::array<int, kMaxVertices> deg{};
    for (const Edge& e : tree) {
        if (e.v >= n || !g.has_edge(e.u, e.v)) return false;
        if (dsu.find(e.u) == dsu.find(e.v)) return false;  // duplicate or cycle
        dsu.unite(e.u, e.v);
        ++deg[e.u];
        ++deg[e.v];
    }
    // n-1 acyclic edges span all n vertices; only degrees remain to check.
    for (int v = 0; v < n; ++v)
        if (deg[v] == 2 && !exempt.vertices.test(v)) return false;
    return true;
}

}  // namespace histlab
