#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/vertex_set.hpp"

namespace qgraph {

// Simple undirected graph as n adjacency rows; row v is the neighborhood N_v.
// Symmetric, zero diagonal. Immutable in spirit: operations return new graphs.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int n_vertices) : n(n_vertices) {
        if (n_vertices < 0 || n_vertices > VertexSet::max_vertices)
            throw std::invalid_argument("Graph: vertex count must be in [0,64]");
        adj.assign(static_cast<std::size_t>(n), VertexSet::empty_set(n));
    }

    static Graph from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n_vertices);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    const VertexSet& neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }

    bool has_edge(int a, int b) const { return a != b && adj[static_cast<std::size_t>(a)].contains(b); }

    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        adj[static_cast<std::size_t>(a)].add(b);
        adj[static_cast<std::size_t>(b)].add(a);
    }

    void toggle_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        if (has_edge(a, b)) {
            adj[static_cast<std::size_t>(a)].remove(b);
            adj[static_cast<std::size_t>(b)].remove(a);
        } else {
            add_edge(a, b);
        }
    }

    int degree(int v) const { return neighbors(v).count(); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }

    // Edges as (a,b) with a<b, lexicographic. Canonical order used everywhere.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n; ++a)
            neighbors(a).for_each([&](int b) { if (a < b) out.emplace_back(a, b); });
        return out;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    bool valid() const {
        for (int v = 0; v < n; ++v) {
            if (neighbors(v).contains(v)) return false;
            bool ok = true;
            neighbors(v).for_each([&](int u) { if (!neighbors(u).contains(v)) ok = false; });
            if (!ok) return false;
        }
        return true;
    }
};

// N_S = △_{v∈S} N_v, the XOR of the adjacency rows selected by s.
inline VertexSet neighborhood_set(const Graph& g, const VertexSet& s) {
    if (s.n != g.n) throw std::invalid_argument("neighborhood_set: dimension mismatch");
    VertexSet acc = VertexSet::empty_set(g.n);
    s.for_each([&](int v) { acc ^= g.neighbors(v); });
    return acc;
}

// Toggle every edge inside N_v; everything else untouched. Involution.
inline Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("local_complement: vertex out of range");
    Graph out = g;
    const VertexSet nv = g.neighbors(v);
    nv.for_each([&](int a) {
        out.adj[static_cast<std::size_t>(a)].bits ^= nv.bits & ~(1ull << a);
    });
    return out;
}

// Relabel with perm[old] = new.
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permute: bad permutation size");
    Graph out(g.n);
    for (int a = 0; a < g.n; ++a)
        g.neighbors(a).for_each([&](int b) {
            if (a < b) out.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        });
    return out;
}

inline VertexSet permute(const VertexSet& s, const std::vector<int>& perm) {
    VertexSet out = VertexSet::empty_set(s.n);
    s.for_each([&](int v) { out.add(perm[static_cast<std::size_t>(v)]); });
    return out;
}

// Connected component containing v, as a vertex set.
inline VertexSet component_of(const Graph& g, int v) {
    VertexSet seen = VertexSet::single(g.n, v);
    std::vector<int> frontier{v};
    while (!frontier.empty()) {
        int a = frontier.back();
        frontier.pop_back();
        g.neighbors(a).for_each([&](int b) {
            if (!seen.contains(b)) { seen.add(b); frontier.push_back(b); }
        });
    }
    return seen;
}

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet done = VertexSet::empty_set(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (done.contains(v)) continue;
        VertexSet c = component_of(g, v);
        done |= c;
        comps.push_back(c);
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n == 0 || component_of(g, 0).count() == g.n;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.n + b.n);
    for (auto [x, y] : a.edges()) out.add_edge(x, y);
    for (auto [x, y] : b.edges()) out.add_edge(a.n + x, a.n + y);
    return out;
}

enum class FamilyKind { loop, star, complete, empty };

// Named graph families: the loop L_n (cycle), the star centered on vertex 0,
// the complete graph, and the edgeless graph.
inline Graph family(FamilyKind kind, int n) {
    if (n < 1) throw std::invalid_argument("family: need n >= 1");
    Graph g(n);
    switch (kind) {
        case FamilyKind::loop:
            if (n == 2) { g.add_edge(0, 1); break; }
            if (n >= 3)
                for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            break;
        case FamilyKind::star:
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            break;
        case FamilyKind::complete:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
            break;
        case FamilyKind::empty:
            break;
        default:
            throw std::invalid_argument("family: unknown kind");
    }
    return g;
}

inline FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "loop") return FamilyKind::loop;
    if (name == "star") return FamilyKind::star;
    if (name == "complete") return FamilyKind::complete;
    if (name == "empty") return FamilyKind::empty;
    throw std::invalid_argument("family: unknown kind '" + name + "'");
}

} // namespace qgraph
