#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "qgraph/clique_search.hpp"
#include "qgraph/code_search.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/graph_classes.hpp"
#include "qgraph/graph_state.hpp"
#include "qgraph/invariants.hpp"
#include "qgraph/runtime.hpp"

namespace qgraph {

// A code whose members never touch some connected component is a smaller
// code padded with spectator graph states. The classification counts genuine
// n-qubit codes, so these padded ones are dropped (their invariants are the
// small code's, and they would otherwise swamp the tables).
inline bool is_trivial_extension(const Graph& g, const std::vector<VertexSet>& members) {
    for (const VertexSet& comp : components(g)) {
        bool touched = false;
        for (const VertexSet& c : members)
            if (c.intersects(comp)) { touched = true; break; }
        if (!touched) return true;
    }
    return false;
}

struct ClassifyClass {
    CodeInvariants fingerprint;
    std::vector<CodingClique> representatives; // one per admitting graph class
    std::size_t code_count = 0;
};

struct ClassifyReport {
    int n = 0, k = 0, d = 0;
    std::vector<ClassifyClass> classes;      // canonical order (fingerprint string)
    std::size_t distribution_count = 0;      // distinct weight distributions
    std::size_t graphs_searched = 0;
    std::size_t graphs_admitting = 0;        // connected LC classes with a group
    std::size_t graphs_admitting_disconnected = 0;
    double seconds = 0;
};

// Sweep every LC + isomorphism class of graphs on n vertices (connected
// representatives plus disconnected combinations), collect all k-dimensional
// coding groups at distance d, verify them, and bucket by the invariant
// fingerprint. Deterministic at any thread count.
inline ClassifyReport classify(int n, int k, int d) {
    auto t0 = std::chrono::steady_clock::now();
    ClassifyReport report;
    report.n = n;
    report.k = k;
    report.d = d;

    std::vector<Graph> graphs = lc_orbit_representatives(n);
    const std::size_t connected_count = graphs.size();
    for (const Graph& g : disconnected_lc_representatives(n)) graphs.push_back(g);
    report.graphs_searched = graphs.size();

    struct PerGraph {
        std::vector<CodingClique> codes;
        std::vector<std::string> keys;
        std::vector<CodeInvariants> invariants;
    };
    std::vector<PerGraph> results(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        for (CodingClique& cc : find_coding_groups(g, d, k)) {
            if (is_trivial_extension(g, cc.members)) continue;
            if (!kl_verify(g, cc.members, d).accepted) continue; // cannot happen; belt and braces
            CodeInvariants inv = code_invariants(g, cc.members);
            results[i].keys.push_back(inv.str());
            results[i].invariants.push_back(std::move(inv));
            results[i].codes.push_back(std::move(cc));
        }
    });

    std::map<std::string, ClassifyClass> buckets;
    std::map<std::string, bool> distributions;
    for (std::size_t i = 0; i < results.size(); ++i) {
        bool admitting = !results[i].codes.empty();
        if (admitting) {
            if (i < connected_count) ++report.graphs_admitting;
            else ++report.graphs_admitting_disconnected;
        }
        std::map<std::string, bool> seen_here;
        for (std::size_t c = 0; c < results[i].codes.size(); ++c) {
            const std::string& key = results[i].keys[c];
            auto [it, fresh] = buckets.emplace(key, ClassifyClass{});
            if (fresh) it->second.fingerprint = results[i].invariants[c];
            ++it->second.code_count;
            if (seen_here.emplace(key, true).second)
                it->second.representatives.push_back(results[i].codes[c]);
            std::string wkey;
            for (const Rational& a : results[i].invariants[c].A) wkey += a.str() + ",";
            distributions.emplace(wkey, true);
        }
    }
    for (auto& [key, cls] : buckets) report.classes.push_back(std::move(cls));
    report.distribution_count = distributions.size();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct SearchReport {
    Graph graph;
    int d = 0;
    CliqueMode mode = CliqueMode::max;
    std::size_t K_param = 0;
    std::vector<CodingClique> codes;     // condition-checked and KL-verified
    std::size_t super_graph_order = 0;
    std::size_t purity_set_size = 0;
    std::size_t uncoverable_count = 0;
    CliqueSearchResult stats;
    bool complete = true;
    double seconds_super_graph = 0;
    double seconds_cliques = 0;
    double seconds_verify = 0;
};

// The end-to-end pipeline: purity set, uncoverable set, super graph, clique
// search, then an independent re-validation of every result (conditions
// straight from the definitions plus the KL check).
inline SearchReport run_search(const Graph& g, int d, CliqueMode mode, std::size_t K = 0,
                               Deadline deadline = Deadline::from_env()) {
    SearchReport rep;
    rep.graph = g;
    rep.d = d;
    rep.mode = mode;
    rep.K_param = K;

    auto t0 = std::chrono::steady_clock::now();
    SuperGraph sg = build_super_graph(g, d);
    rep.super_graph_order = sg.order();
    rep.purity_set_size = purity_set(g, d).members.size();
    rep.uncoverable_count = sg.dd.size();
    auto t1 = std::chrono::steady_clock::now();
    rep.seconds_super_graph = std::chrono::duration<double>(t1 - t0).count();

    std::vector<CodingClique> cliques = find_cliques(sg, mode, K, deadline, &rep.stats);
    rep.complete = rep.stats.complete;
    auto t2 = std::chrono::steady_clock::now();
    rep.seconds_cliques = std::chrono::duration<double>(t2 - t1).count();

    for (CodingClique& cc : cliques) {
        if (!check_conditions(g, d, cc.members)) continue;
        if (!kl_verify(g, cc.members, d).accepted) continue;
        rep.codes.push_back(std::move(cc));
    }
    rep.seconds_verify =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t2).count();
    return rep;
}

} // namespace qgraph
