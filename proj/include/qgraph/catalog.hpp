#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/clique_search.hpp"
#include "qgraph/code_search.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/graph_state.hpp"
#include "qgraph/stabilizer.hpp"

namespace qgraph {

// A named, machine-verified code. Every entry re-verifies from scratch on
// load; the catalog never hands out an unchecked claim.
struct CodeDescriptor {
    std::string name;
    int n = 0;
    std::size_t K = 0;
    int d = 0;
    CodingClique code;
    std::string provenance;
};

namespace catalog_detail {

inline std::vector<VertexSet> one_indexed_members(int n,
                                                  const std::vector<std::vector<int>>& lists) {
    std::vector<VertexSet> out;
    for (const auto& lst : lists) {
        VertexSet s = VertexSet::empty_set(n);
        for (int v : lst) s.add(v - 1);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// members of the star-graph code: every leaf subset of size 2l or 2n+2l+1,
// 0 <= l <= n-1 (center excluded). Sizes include 0, so the empty set is in.
inline std::vector<VertexSet> star_members(int n) {
    const int qubits = 4 * n + 1;
    std::vector<bool> size_ok(static_cast<std::size_t>(qubits), false);
    for (int l = 0; l < n; ++l) {
        size_ok[static_cast<std::size_t>(2 * l)] = true;
        size_ok[static_cast<std::size_t>(2 * n + 2 * l + 1)] = true;
    }
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (qubits - 1)); ++mask) {
        if (!size_ok[static_cast<std::size_t>(std::popcount(mask))]) continue;
        out.emplace_back(qubits, mask << 1); // leaves are vertices 1..4n, center 0
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The extra all-blue member {o} ∪ {4l-2, 4l-1 : l = 1..n} in 1-indexed
// labels, center first.
inline VertexSet blue_member(int n) {
    const int qubits = 4 * n + 1;
    VertexSet b = VertexSet::single(qubits, 0);
    for (int l = 1; l <= n; ++l) {
        b.add(4 * l - 3);
        b.add(4 * l - 2);
    }
    return b;
}

} // namespace catalog_detail

// Search for leaf-leaf edge sets augmenting the star graph so that the
// star-code members plus the all-blue subset form a coding clique at d = 2.
// The conditions reduce to two size constraints per leaf row, which prunes
// the row-by-row enumeration hard; the first witness in ascending mask order
// is returned and fully re-verified by the caller.
inline std::optional<Graph> search_star_augmentation(int n, Deadline deadline = Deadline::from_env()) {
    const int qubits = 4 * n + 1;
    const int leaves = 4 * n;

    std::vector<bool> size_ok(static_cast<std::size_t>(qubits) + 1, false);
    for (int l = 0; l < n; ++l) {
        size_ok[static_cast<std::size_t>(2 * l)] = true;
        size_ok[static_cast<std::size_t>(2 * n + 2 * l + 1)] = true;
    }
    std::uint64_t blue_leaves = 0; // leaf-indexed bitmask (leaf i = vertex i+1)
    for (int l = 1; l <= n; ++l) {
        blue_leaves |= 1ull << (4 * l - 4);
        blue_leaves |= 1ull << (4 * l - 3);
    }

    // rows[v] = black neighbors of leaf v as a leaf mask
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(leaves), 0);
    auto leaf_ok = [&](int v) -> bool {
        std::uint64_t nb = rows[static_cast<std::size_t>(v)];
        int t1 = std::popcount(blue_leaves ^ nb);
        int t2 = std::popcount((blue_leaves ^ nb) ^ (1ull << v));
        return !size_ok[static_cast<std::size_t>(t1)] && !size_ok[static_cast<std::size_t>(t2)];
    };

    std::uint64_t probe = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (deadline.expired()) return false;
        if (v == leaves) return true;
        // choose edges from v to higher leaves; lower bits already fixed
        int higher = leaves - v - 1;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << higher); ++pick) {
            if ((++probe & 0xfffff) == 0 && deadline.expired()) return false;
            std::uint64_t add = pick << (v + 1);
            rows[static_cast<std::size_t>(v)] |= add;
            bool ok = leaf_ok(v);
            if (ok) {
                for (int u = v + 1; u < leaves; ++u)
                    if ((add >> u) & 1) rows[static_cast<std::size_t>(u)] |= 1ull << v;
                if (self(self, v + 1)) return true;
                for (int u = v + 1; u < leaves; ++u)
                    if ((add >> u) & 1) rows[static_cast<std::size_t>(u)] &= ~(1ull << v);
            }
            rows[static_cast<std::size_t>(v)] &= ~add;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    Graph g = family(FamilyKind::star, qubits);
    for (int v = 0; v < leaves; ++v)
        for (int u = v + 1; u < leaves; ++u)
            if ((rows[static_cast<std::size_t>(v)] >> u) & 1) g.add_edge(v + 1, u + 1);
    return g;
}

// Attachment search for the distance-2 family built from the loop graph plus
// 2(m-1) pairwise connected extra vertices: members are C_i △ U with U drawn
// from the group generated by {2, a_j} and {5, b_l}. The unknown edges
// between extras and the loop are found by constraint-guided enumeration.
inline std::optional<Graph> search_rains_attachment(int m, Deadline deadline = Deadline::from_env()) {
    if (m < 2) return family(FamilyKind::loop, 5);
    const int extras = 2 * (m - 1);
    const int n = 5 + extras;

    // the sixteen possible loop-part values of a member difference
    std::vector<std::vector<int>> base = {
        {}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}, {1, 2, 4}};
    std::vector<std::uint64_t> base_masks;
    for (const auto& lst : base) {
        std::uint64_t mask = 0;
        for (int v : lst) mask |= 1ull << (v - 1);
        base_masks.push_back(mask);
    }
    std::vector<bool> diff5(32, false);
    for (std::uint64_t a : base_masks)
        for (std::uint64_t b : base_masks) diff5[a ^ b] = true;

    const std::uint64_t extras_mask = ((std::uint64_t{1} << extras) - 1) << 5;
    auto a_parity = [&](std::uint64_t set) {
        return std::popcount(set & (((std::uint64_t{1} << (m - 1)) - 1) << 5)) & 1;
    };
    auto b_parity = [&](std::uint64_t set) {
        return std::popcount(set & (((std::uint64_t{1} << (m - 1)) - 1) << (5 + m - 1))) & 1;
    };
    // T is a member difference iff adjusting its loop part by the parities of
    // its extra part lands in the 16 loop-level differences.
    auto in_diffset = [&](std::uint64_t t) -> bool {
        if (t == 0) return false;
        std::uint64_t loop_part = t & 0x1f;
        if (a_parity(t)) loop_part ^= 1ull << 1; // vertex 2
        if (b_parity(t)) loop_part ^= 1ull << 4; // vertex 5
        return diff5[loop_part];
    };

    std::vector<std::uint64_t> loop_nbrs(5);
    for (int v = 0; v < 5; ++v)
        loop_nbrs[static_cast<std::size_t>(v)] =
            (1ull << ((v + 1) % 5)) | (1ull << ((v + 4) % 5));

    std::vector<std::uint64_t> attach(static_cast<std::size_t>(extras), 0); // masks over loop vertices

    auto extra_ok = [&](int e) {
        std::uint64_t nv = (extras_mask & ~(1ull << (5 + e))) | attach[static_cast<std::size_t>(e)];
        std::uint64_t vset = 1ull << (5 + e);
        return !in_diffset(nv) && !in_diffset(nv ^ vset);
    };
    auto loop_ok = [&]() {
        for (int v = 0; v < 5; ++v) {
            std::uint64_t nv = loop_nbrs[static_cast<std::size_t>(v)];
            for (int e = 0; e < extras; ++e)
                if ((attach[static_cast<std::size_t>(e)] >> v) & 1) nv |= 1ull << (5 + e);
            if (in_diffset(nv) || in_diffset(nv ^ (1ull << v))) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int e) -> bool {
        if (deadline.expired()) return false;
        if (e == extras) return loop_ok();
        for (std::uint64_t pick = 0; pick < 32; ++pick) {
            attach[static_cast<std::size_t>(e)] = pick;
            if (extra_ok(e) && self(self, e + 1)) return true;
        }
        attach[static_cast<std::size_t>(e)] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    Graph g(n);
    for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
    for (int i = 5; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    for (int e = 0; e < extras; ++e)
        for (int v = 0; v < 5; ++v)
            if ((attach[static_cast<std::size_t>(e)] >> v) & 1) g.add_edge(5 + e, v);
    return g;
}

inline std::vector<VertexSet> rains_members(int m) {
    const int extras = 2 * (m - 1);
    const int n = 5 + extras;
    std::vector<std::vector<int>> base = {
        {}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}, {1, 2, 4}};
    std::vector<VertexSet> gens;
    for (int j = 0; j < m - 1; ++j) {
        VertexSet u = VertexSet::single(n, 1); // vertex 2
        u.add(5 + j);
        gens.push_back(u);
    }
    for (int l = 0; l < m - 1; ++l) {
        VertexSet u = VertexSet::single(n, 4); // vertex 5
        u.add(5 + (m - 1) + l);
        gens.push_back(u);
    }
    std::vector<VertexSet> us{VertexSet::empty_set(n)};
    for (const VertexSet& gen : gens) {
        std::size_t sz = us.size();
        for (std::size_t i = 0; i < sz; ++i) us.push_back(us[i] ^ gen);
    }
    std::vector<VertexSet> out;
    for (const auto& lst : base) {
        VertexSet c = VertexSet::empty_set(n);
        for (int v : lst) c.add(v - 1);
        for (const VertexSet& u : us) out.push_back(c ^ u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace catalog_detail {

inline CodeDescriptor make_verified(std::string name, Graph g, std::vector<VertexSet> members,
                                    int d, std::string provenance) {
    CodeDescriptor desc;
    desc.name = std::move(name);
    desc.n = g.n;
    desc.K = members.size();
    desc.d = d;
    desc.provenance = std::move(provenance);
    std::sort(members.begin(), members.end());
    desc.code.graph = g;
    desc.code.d = d;
    desc.code.members = members;
    desc.code.is_group = closed_under_sym_diff(members);
    if (desc.code.is_group) desc.code.generators = group_generators(members);

    KlVerdict verdict = kl_verify(g, members, d);
    if (!verdict.accepted)
        throw verify_error("catalog entry '" + desc.name + "' failed verification at d=" +
                           std::to_string(d));
    if (!check_conditions(g, d, members))
        throw verify_error("catalog entry '" + desc.name + "' failed the clique conditions");
    return desc;
}

} // namespace catalog_detail

inline std::vector<std::string> catalog_names() {
    return {"l5_662",       "l9_1233",          "star_family(n)", "star_family_plus(n)",
            "rains_family(m)", "pentagon_513", "steane_713"};
}

CodeDescriptor catalog_entry(const std::string& name);

} // namespace qgraph

#include "qgraph/catalog_entries.hpp"
