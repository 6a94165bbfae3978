// Scratch pad: orbit enumeration timing and the 7- and 8-qubit campaigns.
#include <chrono>
#include <cstdio>

#include "qgraph/classify.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/graph_classes.hpp"

using namespace qgraph;

static double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int main() {
    double t0 = now_s();
    for (int n = 1; n <= 7; ++n) {
        auto& all = all_graph_classes(n);
        auto conn = connected_graph_classes(n);
        auto& lcs = lc_orbit_representatives(n);
        std::printf("n=%d: classes=%zu connected=%zu lc_orbits=%zu (%.2fs)\n", n, all.size(),
                    conn.size(), lcs.size(), now_s() - t0);
        t0 = now_s();
    }

    t0 = now_s();
    ClassifyReport rep713 = classify(7, 1, 3);
    std::printf("classify(7,1,3): classes=%zu distributions=%zu admitting=%zu conn + %zu disc "
                "(%.2fs)\n",
                rep713.classes.size(), rep713.distribution_count, rep713.graphs_admitting,
                rep713.graphs_admitting_disconnected, now_s() - t0);
    for (auto& cls : rep713.classes) {
        std::printf("  A:");
        for (std::size_t i = 1; i < cls.fingerprint.A.size(); ++i)
            std::printf(" %s", cls.fingerprint.A[i].str().c_str());
        bool disc = false;
        for (auto& rep : cls.representatives)
            if (!is_connected(rep.graph)) disc = true;
        std::printf("   codes=%zu reps=%zu disc=%d\n", cls.code_count, cls.representatives.size(),
                    disc);
    }

    t0 = now_s();
    auto& all8 = all_graph_classes(8);
    std::printf("n=8: classes=%zu (%.2fs)\n", all8.size(), now_s() - t0);
    t0 = now_s();
    auto& lcs8 = lc_orbit_representatives(8);
    std::printf("n=8: lc_orbits=%zu (%.2fs)\n", lcs8.size(), now_s() - t0);

    t0 = now_s();
    ClassifyReport rep833 = classify(8, 3, 3);
    std::printf("classify(8,3,3): classes=%zu distributions=%zu admitting=%zu conn + %zu disc "
                "(%.2fs)\n",
                rep833.classes.size(), rep833.distribution_count, rep833.graphs_admitting,
                rep833.graphs_admitting_disconnected, now_s() - t0);
    for (auto& cls : rep833.classes) {
        std::printf("  A:");
        for (std::size_t i = 1; i < cls.fingerprint.A.size(); ++i)
            std::printf(" %s", cls.fingerprint.A[i].str().c_str());
        std::printf("   codes=%zu\n", cls.code_count);
    }
    return 0;
}
