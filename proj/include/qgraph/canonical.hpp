#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/vertex_set.hpp"

namespace qgraph {

namespace detail {

// Iterated neighbor-color refinement (1-dimensional WL). The coloring is an
// isomorphism invariant, so restricting candidate labelings to color-sorted
// ones keeps the canonical form well defined while cutting the permutation
// search down hard.
inline std::vector<int> wl_colors(const Graph& g) {
    std::vector<int> col(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) col[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            g.neighbors(v).for_each([&](int u) { s.push_back(col[static_cast<std::size_t>(u)]); });
            std::sort(s.begin(), s.end());
            s.insert(s.begin(), col[static_cast<std::size_t>(v)]);
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(g.n));
        int c = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[static_cast<std::size_t>(sorted[i].second)] = c;
        }
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

// Minimize the upper-triangle bit string (column-major, the graph6 bit
// order) over color-sorted labelings, by placing vertices position by
// position and pruning on the per-column bits against the best complete
// labeling found so far.
struct CanonicalSearch {
    const Graph& g;
    bool collect_all;
    std::vector<int> colors;
    std::vector<int> pos_color;                 // color required at each position
    std::vector<std::uint64_t> path_cols;       // bits of the column being built
    std::vector<std::uint64_t> best_cols;
    std::vector<int> placed;                    // placed[pos] = original vertex
    std::uint64_t placed_mask = 0;
    bool have_best = false;
    std::vector<std::vector<int>> optimal;      // perms with perm[old] = new

    CanonicalSearch(const Graph& graph, bool all) : g(graph), collect_all(all) {
        colors = wl_colors(g);
        std::vector<int> sorted_colors = colors;
        std::sort(sorted_colors.begin(), sorted_colors.end());
        pos_color = sorted_colors;
        path_cols.assign(static_cast<std::size_t>(g.n), 0);
        best_cols.assign(static_cast<std::size_t>(g.n), 0);
    }

    void run() { dfs(0); }

    void dfs(int pos) {
        if (pos == g.n) {
            std::vector<int> perm(static_cast<std::size_t>(g.n));
            for (int p = 0; p < g.n; ++p)
                perm[static_cast<std::size_t>(placed[static_cast<std::size_t>(p)])] = p;
            if (!have_best || path_cols < best_cols) {
                have_best = true;
                best_cols = path_cols;
                optimal.assign(1, std::move(perm));
            } else if (collect_all && path_cols == best_cols) {
                optimal.push_back(std::move(perm));
            }
            return;
        }
        bool tight = have_best;
        for (int i = 0; tight && i < pos; ++i)
            if (path_cols[static_cast<std::size_t>(i)] != best_cols[static_cast<std::size_t>(i)])
                tight = false;
        for (int v = 0; v < g.n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != pos_color[static_cast<std::size_t>(pos)]) continue;
            if ((placed_mask >> v) & 1u) continue;
            // edges from v to already placed vertices; earlier positions are
            // more significant, so bit p gets weight 2^{pos-1-p}
            std::uint64_t bits = 0;
            for (int p = 0; p < pos; ++p)
                bits = (bits << 1) | (g.has_edge(placed[static_cast<std::size_t>(p)], v) ? 1u : 0u);
            if (tight && bits > best_cols[static_cast<std::size_t>(pos)]) continue;
            if (tight && !collect_all && bits == best_cols[static_cast<std::size_t>(pos)] &&
                pos == g.n - 1)
                continue; // would only reproduce the incumbent
            path_cols[static_cast<std::size_t>(pos)] = bits;
            placed.push_back(v);
            placed_mask |= 1ull << v;
            dfs(pos + 1);
            placed.pop_back();
            placed_mask &= ~(1ull << v);
        }
    }
};

} // namespace detail

struct CanonicalForm {
    Graph graph;
    std::vector<int> relabeling; // relabeling[old] = new; permute(g, relabeling) == graph
};

// Isomorphism-invariant representative: two graphs are isomorphic iff their
// canonical graphs compare equal. The canonical graph minimizes the graph6
// body over all color-sorted relabelings.
inline CanonicalForm canonical_form(const Graph& g) {
    if (g.n > 12) throw std::invalid_argument("canonical_form: supported up to 12 vertices");
    if (g.n == 0) return {g, {}};
    detail::CanonicalSearch search(g, false);
    search.run();
    CanonicalForm out;
    out.relabeling = search.optimal.front();
    out.graph = permute(g, out.relabeling);
    return out;
}

// All labelings achieving the canonical form (the automorphism coset).
inline std::vector<std::vector<int>> canonical_labelings(const Graph& g) {
    if (g.n > 12) throw std::invalid_argument("canonical_labelings: supported up to 12 vertices");
    if (g.n == 0) return {{}};
    detail::CanonicalSearch search(g, true);
    search.run();
    return search.optimal;
}

// Compact comparable key: n followed by the canonical adjacency rows.
inline std::vector<std::uint64_t> canonical_key(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(cf.graph.n) + 1);
    key.push_back(static_cast<std::uint64_t>(cf.graph.n));
    for (const VertexSet& row : cf.graph.adj) key.push_back(row.bits);
    return key;
}

// Joint canonical form of a graph plus a family of member subsets: canonical
// graph, then the lexicographically least relabeled member list over the
// optimal labelings. Invariant under simultaneous relabeling of both.
struct CodeCanonicalForm {
    Graph graph;
    std::vector<std::uint64_t> members; // sorted masks after relabeling
    std::vector<int> relabeling;

    bool operator<(const CodeCanonicalForm& o) const {
        if (graph.n != o.graph.n) return graph.n < o.graph.n;
        for (int v = 0; v < graph.n; ++v) {
            std::uint64_t a = graph.adj[static_cast<std::size_t>(v)].bits;
            std::uint64_t b = o.graph.adj[static_cast<std::size_t>(v)].bits;
            if (a != b) return a < b;
        }
        return members < o.members;
    }
    bool operator==(const CodeCanonicalForm& o) const {
        return graph == o.graph && members == o.members;
    }
};

inline CodeCanonicalForm code_canonical_form(const Graph& g, const std::vector<VertexSet>& members) {
    CodeCanonicalForm out;
    bool first = true;
    for (const auto& perm : canonical_labelings(g)) {
        std::vector<std::uint64_t> relabeled;
        relabeled.reserve(members.size());
        for (const VertexSet& m : members) relabeled.push_back(permute(m, perm).bits);
        std::sort(relabeled.begin(), relabeled.end());
        if (first || relabeled < out.members) {
            out.members = std::move(relabeled);
            out.relabeling = perm;
            first = false;
        }
    }
    out.graph = permute(g, out.relabeling);
    return out;
}

} // namespace qgraph
