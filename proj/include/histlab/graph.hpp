#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "histlab/bitset.hpp"

namespace histlab {

// Undirected edge with normalized endpoints u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b || a < 0 || b < 0)
            throw std::domain_error("edge endpoints must be distinct and non-negative");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& l, const Edge& r) {
        if (auto c = l.u <=> r.u; c != 0) return c;
        return l.v <=> r.v;
    }
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Values are cheap to copy and never shared mutably: every exported mutation
// returns a fresh graph, so concurrent readers are safe.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::domain_error("graph order out of range");
    }

    int order() const { return n_; }
    int size() const { return m_; }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::domain_error("self-loops not allowed");
        if (adj_[u].test(v)) throw std::domain_error("edge already present");
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (!adj_[u].test(v)) throw std::domain_error("edge not present");
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }

    // Appends vertex n with the given neighborhood; returns its index.
    // Together with pop_vertex this lets the generator grow and shrink one
    // working graph without copying.
    int push_vertex(const VertexSet& nbrs) {
        if (n_ >= kMaxVertices) throw std::domain_error("vertex cap exceeded");
        if (!nbrs.is_subset_of(VertexSet::first_n(n_)))
            throw std::domain_error("neighborhood references missing vertices");
        int v = n_++;
        adj_[v] = nbrs;
        nbrs.for_each([&](int u) { adj_[u].set(v); });
        m_ += nbrs.count();
        return v;
    }

    // Removes the highest-index vertex.
    void pop_vertex() {
        if (n_ == 0) throw std::domain_error("pop on empty graph");
        int v = --n_;
        m_ -= adj_[v].count();
        adj_[v].for_each([&](int u) { adj_[u].reset(v); });
        adj_[v] = VertexSet{};
    }

    VertexSet vertices() const { return VertexSet::first_n(n_); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_ || a.m_ != b.m_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (!(a.adj_[v] == b.adj_[v])) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::domain_error("vertex out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Convenience builder.
Graph graph_from_edges(int n, const std::vector<Edge>& edges);

// Vertex deletion with renumbering: vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

// Fresh copy with e inserted; e must not be present.
Graph add_edge(const Graph& g, Edge e);

// Replaces edge uv by u-w-v where w is the new highest vertex.
Graph subdivide_edge(const Graph& g, Edge e);

// Structural predicates -------------------------------------------------

bool is_connected(const Graph& g);  // true for n <= 1
int component_count(const Graph& g);

// Component of g containing start, as a vertex set.
VertexSet reach(const Graph& g, int start);

// Length of a shortest cycle; nullopt for forests ("infinite").
std::optional<int> girth(const Graph& g);
bool girth_at_least(const Graph& g, int k);

int min_degree(const Graph& g);  // 0 for n == 0
int max_degree(const Graph& g);
bool is_regular(const Graph& g, int k);
bool is_complete(const Graph& g);
bool is_acyclic(const Graph& g);

// Vertices whose removal disconnects their component.
VertexSet cut_vertices(const Graph& g);

// True iff no vertex cut of size < k exists, with the completeness
// convention that K_n counts as exactly (n-1)-connected.
bool vertex_connectivity_at_least(const Graph& g, int k);

// BFS distances from src; -1 for unreachable vertices.
std::array<std::int8_t, kMaxVertices> bfs_distances(const Graph& g, int src);

}  // namespace histlab
