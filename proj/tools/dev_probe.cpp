// Scratch pad used during development; not part of the deliverable build.
#include <chrono>
#include <cstdio>
#include <random>

#include "qgraph/catalog.hpp"
#include "qgraph/classify.hpp"
#include "qgraph/clique_search.hpp"
#include "qgraph/graph_state.hpp"
#include "qgraph/invariants.hpp"
#include "qgraph/json_io.hpp"
#include "qgraph/stabilizer.hpp"
#include "qgraph/state_vector.hpp"

using namespace qgraph;

static double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int main() {
    // 1. L5 supergraph and the published clique
    Graph l5 = family(FamilyKind::loop, 5);
    SuperGraph sg = build_super_graph(l5, 2);
    std::printf("L5 d=2: supergraph order=%zu uncoverable=%zu purity=%zu\n", sg.order(),
                sg.dd.size(), purity_set(l5, 2).members.size());
    auto maxres = find_cliques(sg, CliqueMode::max);
    std::printf("L5 max clique size=%zu\n", maxres.front().members.size());
    auto allmax = find_cliques(sg, CliqueMode::all_max);
    std::printf("L5 all_max count=%zu\n", allmax.size());
    auto eq5 = catalog_detail::one_indexed_members(
        5, {{}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}, {1, 2, 4}});
    bool found = false;
    for (auto& c : allmax)
        if (c.members == eq5) found = true;
    std::printf("Eq5 clique among all_max: %d\n", found);
    std::printf("kl d=2: %d, kl d=3: %d\n", kl_verify(l5, eq5, 2).accepted,
                kl_verify(l5, eq5, 3).accepted);

    // 2. pushthrough vs state vectors, random
    std::mt19937 rng(42);
    int bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() & 1) g.add_edge(a, b);
        std::uint64_t mask = (1ull << n) - 1;
        PauliOperator e(VertexSet(n, rng() & mask), VertexSet(n, rng() & mask),
                        static_cast<int>(rng() % 4));
        Pushthrough pt = pauli_pushthrough(g, e);
        StateVector lhs = apply_pauli(e, graph_state(g));
        StateVector rhs = basis_state(g, pt.omega_image);
        for (auto& a : rhs.amp) a = a * GaussInt::i_pow(pt.sigma_exp);
        if (!lhs.equals(rhs)) ++bad;
        // overlap vs inner product on random a, b
        VertexSet aset(n, rng() & mask), bset(n, rng() & mask);
        PhaseOrZero ov = overlap(g, aset, e, bset);
        ScaledGauss ip = inner_product(basis_state(g, aset), apply_pauli(e, basis_state(g, bset)));
        ScaledGauss expect(ov.value(), 0);
        if (!(ip == expect)) ++bad;
    }
    std::printf("pushthrough/overlap mismatches: %d\n", bad);

    // 3. weight distribution of the pentagon group code
    auto groups513 = find_coding_groups(l5, 3, 1);
    std::printf("pentagon groups: %zu\n", groups513.size());
    for (auto& grp : groups513) {
        auto A = weight_distribution(l5, grp.members);
        std::printf("  members:");
        for (auto& m : grp.members) std::printf(" %llx", (unsigned long long)m.bits);
        std::printf("  A:");
        for (auto& a : A) std::printf(" %s", a.str().c_str());
        auto A2 = weight_distribution_group(l5, grp.members);
        std::printf("  (group route match: %d, pure: %d)\n", A == A2,
                    is_pure(l5, grp.members, 3));
    }

    // 4. Steane
    double t0 = now_s();
    CodeDescriptor steane = catalog_entry("steane_713");
    auto A = weight_distribution(steane.code.graph, steane.code.members);
    std::printf("steane: n=%d K=%zu d=%d  A:", steane.n, steane.K, steane.d);
    for (auto& a : A) std::printf(" %s", a.str().c_str());
    std::printf("  (%.2fs)\n", now_s() - t0);
    std::printf("steane graph g6=%s edges=%d\n", to_graph6(steane.code.graph).c_str(),
                steane.code.graph.edge_count());

    // 5. L9 timing
    t0 = now_s();
    Graph l9 = family(FamilyKind::loop, 9);
    SuperGraph sg9 = build_super_graph(l9, 3);
    std::printf("L9 d=3: order=%zu (%.2fs)\n", sg9.order(), now_s() - t0);
    t0 = now_s();
    CliqueSearchResult stats;
    auto max9 = find_cliques(sg9, CliqueMode::max, 0, Deadline(), &stats);
    std::printf("L9 max=%zu nodes=%llu (%.2fs)\n", max9.front().members.size(),
                (unsigned long long)stats.nodes, now_s() - t0);
    for (auto& m : max9.front().members) {
        std::printf(" {");
        for (int v : m.vertices()) std::printf("%d,", v + 1);
        std::printf("}");
    }
    std::printf("\n");
    t0 = now_s();
    auto thirteen = find_cliques(sg9, CliqueMode::exhaustive, 13, Deadline(), &stats);
    std::printf("L9 13-cliques=%zu nodes=%llu (%.2fs)\n", thirteen.size(),
                (unsigned long long)stats.nodes, now_s() - t0);
    std::printf("L9 kl d=3 of found: %d\n",
                kl_verify(l9, max9.front().members, 3).accepted);

    // 6. star families
    t0 = now_s();
    CodeDescriptor s1 = catalog_entry("star_family(1)");
    std::printf("star(1): K=%zu (%.2fs)\n", s1.K, now_s() - t0);
    t0 = now_s();
    CodeDescriptor s2 = catalog_entry("star_family(2)");
    std::printf("star(2): K=%zu (%.2fs)\n", s2.K, now_s() - t0);
    t0 = now_s();
    CodeDescriptor sp1 = catalog_entry("star_family_plus(1)");
    std::printf("star_plus(1): K=%zu edges=%d g6=%s (%.2fs)\n", sp1.K,
                sp1.code.graph.edge_count(), to_graph6(sp1.code.graph).c_str(), now_s() - t0);
    t0 = now_s();
    CodeDescriptor sp2 = catalog_entry("star_family_plus(2)");
    std::printf("star_plus(2): K=%zu edges=%d g6=%s (%.2fs)\n", sp2.K,
                sp2.code.graph.edge_count(), to_graph6(sp2.code.graph).c_str(), now_s() - t0);
    t0 = now_s();
    CodeDescriptor r2 = catalog_entry("rains_family(2)");
    std::printf("rains(2): n=%d K=%zu g6=%s (%.2fs)\n", r2.n, r2.K,
                to_graph6(r2.code.graph).c_str(), now_s() - t0);

    // 7. classification small cases
    t0 = now_s();
    ClassifyReport rep422 = classify(4, 2, 2);
    std::printf("classify(4,2,2): classes=%zu distributions=%zu admitting=%zu+%zu (%.2fs)\n",
                rep422.classes.size(), rep422.distribution_count, rep422.graphs_admitting,
                rep422.graphs_admitting_disconnected, now_s() - t0);
    t0 = now_s();
    ClassifyReport rep513 = classify(5, 1, 3);
    std::printf("classify(5,1,3): classes=%zu admitting=%zu+%zu (%.2fs)\n", rep513.classes.size(),
                rep513.graphs_admitting, rep513.graphs_admitting_disconnected, now_s() - t0);
    t0 = now_s();
    ClassifyReport rep613 = classify(6, 1, 3);
    std::printf("classify(6,1,3): classes=%zu admitting=%zu+%zu (%.2fs)\n", rep613.classes.size(),
                rep613.graphs_admitting, rep613.graphs_admitting_disconnected, now_s() - t0);
    for (auto& cls : rep613.classes) {
        std::printf("  A:");
        for (auto& a : cls.fingerprint.A) std::printf(" %s", a.str().c_str());
        std::printf("  codes=%zu pure=%d\n", cls.code_count,
                    is_pure(cls.representatives.front().graph,
                            cls.representatives.front().members, 3));
    }
    return 0;
}
