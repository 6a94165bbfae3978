#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "qgraph/canonical.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/runtime.hpp"

namespace qgraph {

using GraphKey = std::vector<std::uint64_t>;

// One canonical representative per isomorphism class of graphs on n
// vertices, built by extending the (n-1)-vertex classes with every possible
// neighborhood for a new vertex. Results are cached per n.
inline const std::vector<Graph>& all_graph_classes(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_graph_classes: supported for 1 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    if (cache.find(1) == cache.end()) cache[1] = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        if (cache.find(m) != cache.end()) continue;
        const std::vector<Graph>& base = cache[m - 1];
        std::vector<std::vector<std::pair<GraphKey, Graph>>> found(base.size());
        parallel_for(base.size(), [&](std::size_t i) {
            const Graph& g = base[i];
            auto& local = found[i];
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph h(m);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, m - 1);
                CanonicalForm cf = canonical_form(h);
                GraphKey key;
                key.push_back(static_cast<std::uint64_t>(m));
                for (const VertexSet& row : cf.graph.adj) key.push_back(row.bits);
                local.emplace_back(std::move(key), cf.graph);
            }
        });
        std::map<GraphKey, Graph> classes;
        for (auto& local : found)
            for (auto& [key, graph] : local) classes.emplace(std::move(key), std::move(graph));
        std::vector<Graph> level;
        level.reserve(classes.size());
        for (auto& [key, graph] : classes) level.push_back(std::move(graph));
        cache[m] = std::move(level);
    }
    return cache[n];
}

inline std::vector<Graph> connected_graph_classes(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graph_classes(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

// One representative per equivalence class of connected graphs under local
// complementation + isomorphism (the representative is the least canonical
// key in the orbit). Connected counts for n = 1..8: 1,1,1,2,4,11,26,101.
inline const std::vector<Graph>& lc_orbit_representatives(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("lc_orbit_representatives: supported for 1 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    std::vector<Graph> classes = connected_graph_classes(n);
    std::map<GraphKey, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        GraphKey key;
        key.push_back(static_cast<std::uint64_t>(n));
        for (const VertexSet& row : classes[i].adj) key.push_back(row.bits);
        index.emplace(std::move(key), i);
    }

    std::vector<bool> visited(classes.size(), false);
    std::vector<Graph> reps;
    for (std::size_t start = 0; start < classes.size(); ++start) {
        if (visited[start]) continue;
        // BFS closure of the orbit under single-vertex LC moves
        std::set<GraphKey> orbit;
        std::vector<Graph> frontier{classes[start]};
        visited[start] = true;
        GraphKey best;
        Graph best_graph = classes[start];
        {
            GraphKey k;
            k.push_back(static_cast<std::uint64_t>(n));
            for (const VertexSet& row : classes[start].adj) k.push_back(row.bits);
            best = k;
            orbit.insert(k);
        }
        while (!frontier.empty()) {
            Graph g = frontier.back();
            frontier.pop_back();
            for (int v = 0; v < n; ++v) {
                CanonicalForm cf = canonical_form(local_complement(g, v));
                GraphKey key;
                key.push_back(static_cast<std::uint64_t>(n));
                for (const VertexSet& row : cf.graph.adj) key.push_back(row.bits);
                if (orbit.insert(key).second) {
                    auto it = index.find(key);
                    if (it != index.end()) visited[it->second] = true;
                    if (key < best) {
                        best = key;
                        best_graph = cf.graph;
                    }
                    frontier.push_back(cf.graph);
                }
            }
        }
        reps.push_back(best_graph);
    }
    std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
        for (int v = 0; v < a.n; ++v) {
            std::uint64_t x = a.adj[static_cast<std::size_t>(v)].bits;
            std::uint64_t y = b.adj[static_cast<std::size_t>(v)].bits;
            if (x != y) return x < y;
        }
        return false;
    });

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(reps)).first->second;
}

// Disconnected LC + isomorphism representatives on n vertices: every
// multiset of at least two connected LC representatives whose sizes sum to
// n, composed as a disjoint union.
inline std::vector<Graph> disconnected_lc_representatives(int n) {
    struct Part {
        int size;
        Graph graph;
    };
    std::vector<Part> parts;
    for (int s = 1; s < n; ++s)
        for (const Graph& g : lc_orbit_representatives(s)) parts.push_back({s, g});

    std::vector<Graph> out;
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            if (chosen.size() < 2) return;
            Graph acc(0);
            for (std::size_t idx : chosen) acc = disjoint_union(acc, parts[idx].graph);
            out.push_back(acc);
            return;
        }
        for (std::size_t idx = start; idx < parts.size(); ++idx) {
            if (parts[idx].size > remaining) continue;
            chosen.push_back(idx);
            self(self, idx, remaining - parts[idx].size);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace qgraph
