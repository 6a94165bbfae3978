// Scratch pad: exhaustive(24) certification cost on 10-vertex candidates.
#include <chrono>
#include <cstdio>
#include <vector>

#include "qgraph/classify.hpp"
#include "qgraph/graph6.hpp"

using namespace qgraph;

static double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

static Graph circulant(int n, std::vector<int> shifts) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int s : shifts) {
            int u = (v + s) % n;
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
    return g;
}

static Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

static void probe(const char* name, const Graph& g) {
    double t0 = now_s();
    SuperGraph sg = build_super_graph(g, 3);
    CliqueSearchResult stats;
    auto res = find_cliques(sg, CliqueMode::exhaustive, 24, Deadline::after_seconds(300), &stats);
    std::printf("%-16s order=%4zu cliques24=%zu complete=%d nodes=%10llu (%.2fs)\n", name,
                sg.order(), res.size(), stats.complete, (unsigned long long)stats.nodes,
                now_s() - t0);
    std::fflush(stdout);
}

int main() {
    probe("L10", circulant(10, {1}));
    probe("Petersen", petersen());
    probe("C10(2,5)", circulant(10, {2, 5}));
    probe("C10(1,2,3,5)", circulant(10, {1, 2, 3, 5}));
    probe("C10(1,2)", circulant(10, {1, 2}));
    return 0;
}
