#include "histlab/canon.hpp"

#include <algorithm>
#include <cassert>

#include "histlab/graph6.hpp"

namespace histlab {

namespace {

using Key = std::vector<std::uint64_t>;
using VertexMap = std::array<std::uint8_t, kMaxVertices>;

struct OrbitUf {
    std::array<int, kMaxVertices> parent;
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the smallest vertex as representative
    }
};

// Ordered partition: perm lists vertices by position, is_start marks cell
// boundaries.
struct Partition {
    VertexMap perm;
    VertexMap pos;
    std::array<char, kMaxVertices> is_start;

    void init(int n) {
        for (int i = 0; i < n; ++i) {
            perm[i] = static_cast<std::uint8_t>(i);
            pos[i] = static_cast<std::uint8_t>(i);
            is_start[i] = (i == 0);
        }
    }
};

struct CanonSearch {
    const Graph& g;
    const int n;

    std::vector<std::vector<int>> generators;
    OrbitUf orbits;

    bool have_first = false;
    Key first_key, best_key;
    VertexMap first_pos{}, best_pos{};  // vertex -> canonical position
    VertexMap first_perm{}, best_perm{};

    std::vector<int> prefix;  // individualized vertices on the current path

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        orbits.init(n);
    }

    int cell_end(const Partition& p, int start) const {
        int e = start + 1;
        while (e < n && !p.is_start[e]) ++e;
        return e;
    }

    // Equitable refinement: split every cell by neighbor counts into each
    // splitter cell, counts ascending, until stable. Deterministic and
    // equivariant, which is all the canonicity argument needs.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n && !changed; s = cell_end(p, s)) {
                VertexSet splitter;
                for (int i = s, se = cell_end(p, s); i < se; ++i) splitter.set(p.perm[i]);
                for (int d = 0; d < n && !changed; d = cell_end(p, d)) {
                    int de = cell_end(p, d);
                    if (de - d == 1) continue;
                    int cnt[kMaxVertices];
                    bool uniform = true;
                    for (int i = d; i < de; ++i) {
                        cnt[i] = (g.neighbors(p.perm[i]) & splitter).count();
                        if (cnt[i] != cnt[d]) uniform = false;
                    }
                    if (uniform) continue;
                    // Stable sort of the segment by count.
                    std::uint8_t seg[kMaxVertices];
                    int idx[kMaxVertices];
                    for (int i = d; i < de; ++i) idx[i - d] = i;
                    std::stable_sort(idx, idx + (de - d),
                                     [&](int a, int b) { return cnt[a] < cnt[b]; });
                    for (int i = 0; i < de - d; ++i) seg[i] = p.perm[idx[i]];
                    int prev = cnt[idx[0]];
                    for (int i = 0; i < de - d; ++i) {
                        p.perm[d + i] = seg[i];
                        p.pos[seg[i]] = static_cast<std::uint8_t>(d + i);
                        int c = cnt[idx[i]];
                        if (i > 0 && c != prev) p.is_start[d + i] = 1;
                        prev = c;
                    }
                    changed = true;
                }
            }
        }
    }

    // First smallest non-singleton cell; -1 when discrete.
    int target_cell(const Partition& p) const {
        int best = -1, best_size = n + 1;
        for (int s = 0; s < n; s = cell_end(p, s)) {
            int size = cell_end(p, s) - s;
            if (size > 1 && size < best_size) {
                best_size = size;
                best = s;
            }
        }
        return best;
    }

    Key leaf_key(const Partition& p) const {
        Key key((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (g.neighbors(p.perm[i]).test(p.perm[j]))
                    key[idx >> 6] |= std::uint64_t{1} << (idx & 63);
                ++idx;
            }
        return key;
    }

    bool is_automorphism(const std::vector<int>& a) const {
        for (int v = 0; v < n; ++v) {
            VertexSet mapped;
            g.neighbors(v).for_each([&](int w) { mapped.set(a[w]); });
            if (!(mapped == g.neighbors(a[v]))) return false;
        }
        return true;
    }

    // pos_a and pos_b label the same canonical graph, so the map sending v to
    // the vertex at v's position in the other leaf is an automorphism.
    void record_automorphism(const VertexMap& perm_a, const VertexMap& pos_b) {
        std::vector<int> a(n);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            a[v] = perm_a[pos_b[v]];
            if (a[v] != v) identity = false;
        }
        if (identity) return;
        if (!is_automorphism(a)) {
            assert(false && "leaf collision did not yield an automorphism");
            return;
        }
        for (int v = 0; v < n; ++v) orbits.unite(v, a[v]);
        generators.push_back(std::move(a));
    }

    void leaf(const Partition& p) {
        Key key = leaf_key(p);
        if (!have_first) {
            have_first = true;
            first_key = key;
            best_key = key;
            for (int v = 0; v < n; ++v) {
                first_perm[v] = p.perm[v];
                first_pos[v] = p.pos[v];
            }
            best_perm = first_perm;
            best_pos = first_pos;
            return;
        }
        if (key == first_key) {
            record_automorphism(first_perm, p.pos);
            return;
        }
        if (key == best_key) {
            record_automorphism(best_perm, p.pos);
            return;
        }
        if (key > best_key) {
            best_key = key;
            for (int v = 0; v < n; ++v) {
                best_perm[v] = p.perm[v];
                best_pos[v] = p.pos[v];
            }
        }
    }

    // Orbits of the subgroup generated by automorphisms fixing the current
    // prefix pointwise; used to skip equivalent branches.
    void prefix_orbits(OrbitUf& uf) const {
        uf.init(n);
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int v : prefix)
                if (gen[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) uf.unite(v, gen[v]);
        }
    }

    void search(const Partition& p) {
        int t = target_cell(p);
        if (t < 0) {
            leaf(p);
            return;
        }
        int te = cell_end(p, t);
        int cand[kMaxVertices];
        int k = 0;
        for (int i = t; i < te; ++i) cand[k++] = p.perm[i];
        std::sort(cand, cand + k);
        VertexSet tried;
        OrbitUf uf;
        for (int ci = 0; ci < k; ++ci) {
            int v = cand[ci];
            if (tried.any()) {
                prefix_orbits(uf);
                bool skip = false;
                int rv = uf.find(v);
                tried.for_each([&](int u) {
                    if (uf.find(u) == rv) skip = true;
                });
                if (skip) {
                    tried.set(v);
                    continue;
                }
            }
            // Individualize v at the front of its cell, then refine.
            Partition q = p;
            int from = q.pos[v];
            for (int i = from; i > t; --i) {
                q.perm[i] = q.perm[i - 1];
                q.pos[q.perm[i]] = static_cast<std::uint8_t>(i);
            }
            q.perm[t] = static_cast<std::uint8_t>(v);
            q.pos[v] = static_cast<std::uint8_t>(t);
            q.is_start[t] = 1;
            q.is_start[t + 1] = 1;
            refine(q);
            prefix.push_back(v);
            search(q);
            prefix.pop_back();
            tried.set(v);
        }
    }

    CanonResult run() {
        CanonResult out;
        if (n == 0) {
            out.canonical = Graph(0);
            return out;
        }
        Partition p;
        p.init(n);
        refine(p);
        search(p);
        out.labeling.resize(n);
        for (int v = 0; v < n; ++v) out.labeling[v] = best_pos[v];
        out.canonical = Graph(n);
        for (int v = 0; v < n; ++v)
            g.neighbors(v).for_each([&](int w) {
                if (v < w) out.canonical.add_edge(best_pos[v], best_pos[w]);
            });
        out.orbit.resize(n);
        for (int v = 0; v < n; ++v) out.orbit[v] = orbits.find(v);
        out.generators = std::move(generators);
        return out;
    }
};

}  // namespace

CanonResult canonical_form(const Graph& g) { return CanonSearch(g).run(); }

std::string canonical_graph6(const Graph& g) {
    return to_graph6(canonical_form(g).canonical);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).canonical == canonical_form(b).canonical;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

}  // namespace histlab
