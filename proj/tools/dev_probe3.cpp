// Scratch pad: hunt for a ((10,24,3)) witness among structured 10-vertex
// candidates (circulants, Petersen, prisms).
#include <chrono>
#include <cstdio>
#include <vector>

#include "qgraph/classify.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/invariants.hpp"

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
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

static void probe(const char* name, const Graph& g) {
    double t0 = now_s();
    SuperGraph sg = build_super_graph(g, 3);
    CliqueSearchResult stats;
    auto res = find_cliques(sg, CliqueMode::max, 0, Deadline::after_seconds(120), &stats);
    std::size_t best = res.empty() ? 0 : res.front().members.size();
    std::printf("%-22s order=%4zu max=%2zu complete=%d nodes=%8llu (%.2fs)", name, sg.order(),
                best, stats.complete, (unsigned long long)stats.nodes, now_s() - t0);
    if (best >= 24) {
        auto& code = res.front();
        bool kl = kl_verify(g, code.members, 3).accepted;
        std::printf("  KL(3)=%d", kl);
        if (kl) {
            auto A = weight_distribution(g, code.members);
            std::printf("  A:");
            for (std::size_t i = 0; i <= 10; ++i)
                if (!A[i].is_zero()) std::printf(" A%zu=%s", i, A[i].str().c_str());
        }
    }
    std::printf("\n");
    std::fflush(stdout);
}

int main() {
    probe("L10", circulant(10, {1}));
    probe("C10(1,2)", circulant(10, {1, 2}));
    probe("C10(1,3)", circulant(10, {1, 3}));
    probe("C10(1,4)", circulant(10, {1, 4}));
    probe("C10(1,5)", circulant(10, {1, 5}));
    probe("C10(2,5)", circulant(10, {2, 5}));
    probe("C10(1,2,3)", circulant(10, {1, 2, 3}));
    probe("C10(1,2,4)", circulant(10, {1, 2, 4}));
    probe("C10(1,2,5)", circulant(10, {1, 2, 5}));
    probe("C10(1,3,5)", circulant(10, {1, 3, 5}));
    probe("C10(1,4,5)", circulant(10, {1, 4, 5}));
    probe("C10(2,3)", circulant(10, {2, 3}));
    probe("C10(2,4)", circulant(10, {2, 4}));
    probe("C10(1,2,3,4)", circulant(10, {1, 2, 3, 4}));
    probe("C10(1,2,3,5)", circulant(10, {1, 2, 3, 5}));
    probe("C10(1,2,4,5)", circulant(10, {1, 2, 4, 5}));
    probe("C10(1,3,4,5)", circulant(10, {1, 3, 4, 5}));
    probe("C10(2,3,4,5)", circulant(10, {2, 3, 4, 5}));
    probe("C10(1,2,3,4,5)", circulant(10, {1, 2, 3, 4, 5}));
    probe("C10(2,3,4)", circulant(10, {2, 3, 4}));
    probe("C10(2,3,5)", circulant(10, {2, 3, 5}));
    probe("C10(2,4,5)", circulant(10, {2, 4, 5}));
    probe("C10(3,4,5)", circulant(10, {3, 4, 5}));
    probe("C10(3,4)", circulant(10, {3, 4}));
    probe("C10(3,5)", circulant(10, {3, 5}));
    probe("C10(4,5)", circulant(10, {4, 5}));
    probe("Petersen", petersen());
    return 0;
}
