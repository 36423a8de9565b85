#include "histlab/generate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "histlab/canon.hpp"
#include "histlab/graph6.hpp"
#include "histlab/planarity.hpp"

namespace histlab {

namespace {

constexpr int kOrderCeiling = 11;

// Cheap isomorphism-invariant vertex key: degree, then the sorted-descending
// multiset of neighbor degrees. The canonical deletion rule prefers larger
// keys, so most augmentation candidates are rejected before any canonical
// labeling runs.
struct VertexInv {
    int deg = 0;
    std::array<std::uint8_t, kOrderCeiling> nbr{};  // descending, padded with 0

    friend auto operator<=>(const VertexInv&, const VertexInv&) = default;
};

VertexInv vertex_inv(const Graph& g, int v) {
    VertexInv inv;
    inv.deg = g.degree(v);
    int k = 0;
    g.neighbors(v).for_each([&](int w) { inv.nbr[k++] = static_cast<std::uint8_t>(g.degree(w)); });
    std::sort(inv.nbr.begin(), inv.nbr.begin() + k, std::greater<>());
    return inv;
}

struct GenRun {
    const GenConstraints& c;
    const std::function<bool(const Graph&)>& emit;
    bool connected_mode;
    int target;
    int min_deg;
    int max_deg;
    int girth_min;  // 0 = unconstrained
    bool stopped = false;
    Graph work;

    GenRun(const GenConstraints& cons, const std::function<bool(const Graph&)>& cb)
        : c(cons), emit(cb) {
        target = c.order;
        connected_mode = c.connectivity_min.value_or(0) >= 1;
        min_deg = c.regular_k.value_or(c.min_degree.value_or(0));
        max_deg = c.regular_k.value_or(c.max_degree.value_or(target - 1));
        girth_min = c.girth_min.value_or(0);
    }

    bool final_filters(const Graph& g) const {
        if (min_degree(g) < min_deg || histlab::max_degree(g) > max_deg) return false;
        // connectivity_min = 1 means connected, which K1 satisfies even
        // though its vertex connectivity is 0.
        if (c.connectivity_min == 1 && !is_connected(g)) return false;
        if (c.connectivity_min.value_or(1) >= 2 &&
            !vertex_connectivity_at_least(g, *c.connectivity_min))
            return false;
        if (c.planar_only && !is_planar(g)) return false;
        return true;
    }

    void run() {
        if (target == 1) {
            Graph k1(1);
            if (final_filters(k1)) emit(k1);
            return;
        }
        work = Graph(1);
        CanonResult root = canonical_form(work);
        expand(root);
    }

    // The new vertex is an acceptable canonical deletion of `child` iff it is
    // non-cut (in connected mode), its invariant key is maximal among
    // candidates, and deleting it matches the canonical deletion graph. The
    // rule is isomorphism-invariant, so each class is built from exactly one
    // parent class; a per-parent set of child keys removes the rest.
    bool accept_child(const Graph& child, int v_new, CanonResult& canon_out) const {
        VertexSet candidates = child.vertices();
        if (connected_mode) candidates = candidates.and_not(cut_vertices(child));
        // Degree stage.
        int dv = child.degree(v_new);
        bool dominated = false;
        candidates.for_each([&](int u) {
            if (child.degree(u) > dv) dominated = true;
        });
        if (dominated) return false;
        // Full invariant stage among degree ties.
        VertexInv inv_new = vertex_inv(child, v_new);
        std::array<int, kOrderCeiling + 1> tied{};
        int num_tied = 0;
        bool beaten = false;
        candidates.for_each([&](int u) {
            if (u == v_new || child.degree(u) != dv || beaten) return;
            VertexInv iu = vertex_inv(child, u);
            if (iu > inv_new)
                beaten = true;
            else if (iu == inv_new)
                tied[num_tied++] = u;
        });
        if (beaten) return false;

        canon_out = canonical_form(child);
        if (num_tied == 0) return true;  // v_new is the unique candidate
        int vstar = v_new;
        for (int i = 0; i < num_tied; ++i)
            if (canon_out.labeling[tied[i]] > canon_out.labeling[vstar]) vstar = tied[i];
        if (vstar == v_new) return true;
        if (canon_out.orbit[vstar] == canon_out.orbit[v_new]) return true;
        // Rare: invariants and canonical position disagree about orbits; fall
        // back to comparing the deletion graphs themselves.
        return canonical_graph6(delete_vertex(child, v_new)) ==
               canonical_graph6(delete_vertex(child, vstar));
    }

    void expand(const CanonResult& parent_canon) {
        if (stopped) return;
        const int k = work.order();
        const int remaining = target - (k + 1);  // additions after this child

        // Degree-based subset constraints.
        std::uint32_t allowed = 0, needy = 0;
        for (int u = 0; u < k; ++u) {
            int d = work.degree(u);
            if (d + 1 + remaining < min_deg) return;  // u can no longer reach min_deg
            if (d < max_deg) allowed |= std::uint32_t{1} << u;
            if (d + remaining < min_deg) needy |= std::uint32_t{1} << u;
        }
        if ((needy & ~allowed) != 0) return;
        int max_size = std::min(max_deg, k);
        int min_size = std::max(min_deg - remaining, connected_mode ? 1 : 0);
        if (c.planar_only && k + 1 >= 3)
            max_size = std::min(max_size, 3 * (k + 1) - 6 - work.size());
        if (min_size > max_size) return;

        // Pairs too close for the girth bound: masks of vertices within
        // distance girth_min - 3 (a new cycle through two attachment points
        // at parent distance d has length d + 2).
        std::array<std::uint32_t, kOrderCeiling> near{};
        if (girth_min >= 3) {
            for (int u = 0; u < k; ++u) {
                auto dist = bfs_distances(work, u);
                std::uint32_t m = 0;
                for (int v = 0; v < k; ++v)
                    if (v != u && dist[v] >= 0 && dist[v] <= girth_min - 3)
                        m |= std::uint32_t{1} << v;
                near[u] = m;
            }
        }

        // One subset per orbit of the parent's (verified) automorphisms.
        const std::uint32_t free_bits = allowed & ~needy;
        std::vector<char> seen;
        const bool use_orbits = !parent_canon.generators.empty();
        if (use_orbits) seen.assign(std::size_t{1} << k, 0);
        auto mark_orbit = [&](std::uint32_t s0) {
            // Closure of {s0} under the generators.
            std::vector<std::uint32_t> queue{s0};
            seen[s0] = 1;
            while (!queue.empty()) {
                std::uint32_t s = queue.back();
                queue.pop_back();
                for (const auto& gen : parent_canon.generators) {
                    std::uint32_t img = 0;
                    std::uint32_t rest = s;
                    while (rest) {
                        int b = std::countr_zero(rest);
                        rest &= rest - 1;
                        img |= std::uint32_t{1} << gen[b];
                    }
                    if (!seen[img]) {
                        seen[img] = 1;
                        queue.push_back(img);
                    }
                }
            }
        };

        std::unordered_set<std::string> emitted_children;
        // Enumerate S = needy | x for all submasks x of free_bits.
        std::uint32_t x = free_bits;
        while (true) {
            std::uint32_t s = needy | x;
            bool viable = std::popcount(s) >= min_size && std::popcount(s) <= max_size;
            if (viable && use_orbits) {
                if (seen[s])
                    viable = false;
                else
                    mark_orbit(s);
            }
            if (viable && girth_min >= 3) {
                std::uint32_t rest = s;
                while (rest && viable) {
                    int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (near[b] & s) viable = false;
                }
            }
            if (viable) {
                VertexSet nbrs;
                std::uint32_t rest = s;
                while (rest) {
                    int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    nbrs.set(b);
                }
                int v_new = work.push_vertex(nbrs);
                CanonResult child_canon;
                if (accept_child(work, v_new, child_canon) &&
                    emitted_children.insert(to_graph6(child_canon.canonical)).second) {
                    if (work.order() == target) {
                        if (final_filters(work) && !emit(work)) stopped = true;
                    } else {
                        expand(child_canon);
                    }
                }
                work.pop_vertex();
                if (stopped) return;
            }
            if (x == 0) break;
            x = (x - 1) & free_bits;
        }
    }
};

}  // namespace

void generate(const GenConstraints& c, const std::function<bool(const Graph&)>& emit) {
    if (c.order < 1) throw std::domain_error("generator order must be at least 1");
    if (c.order > kOrderCeiling)
        throw std::domain_error("generator is capped at order " + std::to_string(kOrderCeiling));
    if (c.regular_k && (c.min_degree || c.max_degree) &&
        (c.min_degree.value_or(*c.regular_k) != *c.regular_k ||
         c.max_degree.value_or(*c.regular_k) != *c.regular_k))
        throw std::domain_error("regular_k conflicts with explicit degree bounds");
    GenRun run(c, emit);
    run.run();
}

std::vector<Graph> generate_all(const GenConstraints& c) {
    std::vector<Graph> out;
    generate(c, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::vector<Graph> brute_mask_generate(int n) {
    if (n < 1 || n > 7) throw std::domain_error("brute_mask_generate supports 1 <= n <= 7");
    const int bits = n * (n - 1) / 2;
    int pair_index[7][7];
    int bit_u[21], bit_v[21];
    {
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                pair_index[i][j] = idx;
                pair_index[j][i] = idx;
                bit_u[idx] = i;
                bit_v[idx] = j;
                ++idx;
            }
    }
    std::vector<int> perm(n);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        // Keep mask only if it is the minimum over all relabelings.
        for (int i = 0; i < n; ++i) perm[i] = i;
        bool canonical = true;
        do {
            std::uint32_t relabeled = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                relabeled |= std::uint32_t{1} << pair_index[perm[bit_u[b]]][perm[bit_v[b]]];
            }
            if (relabeled < mask) {
                canonical = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!canonical) continue;
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> pair_index[i][j]) & 1) g.add_edge(i, j);
        out.push_back(g);
    }
    return out;
}

}  // namespace histlab
