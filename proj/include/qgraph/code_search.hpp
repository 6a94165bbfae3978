#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgraph/gf2_matrix.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/graph_state.hpp"
#include "qgraph/vertex_set.hpp"

namespace qgraph {

// S_d: nonempty subsets S with |S ∪ N_S| < d. The empty set is excluded; it
// imposes no parity constraint and would make the emptiness-based purity
// criterion vacuous.
struct PuritySet {
    int d = 0;
    std::vector<VertexSet> members;
};

inline PuritySet purity_set(const Graph& g, int d) {
    if (d < 1 || d > g.n) throw std::invalid_argument("purity_set: need 1 <= d <= n");
    if (g.n > 20) throw std::invalid_argument("purity_set: n too large");
    PuritySet out;
    out.d = d;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.n); ++m) {
        VertexSet s(g.n, m);
        if ((s | neighborhood_set(g, s)).count() < d) out.members.push_back(s);
    }
    return out;
}

// D_d as a flat membership table over all 2^n subsets: C is uncoverable iff
// no pair (delta, omega) with |delta ∪ omega| < d has C = delta △ N_omega.
struct UncoverableSet {
    int n = 0;
    int d = 0;
    std::vector<bool> uncoverable; // indexed by subset mask

    bool contains(const VertexSet& c) const { return uncoverable[c.bits]; }
    bool contains_mask(std::uint64_t m) const { return uncoverable[m]; }

    std::size_t size() const {
        return static_cast<std::size_t>(std::count(uncoverable.begin(), uncoverable.end(), true));
    }
};

inline UncoverableSet uncoverable_set(const Graph& g, int d) {
    if (d < 1 || d > g.n) throw std::invalid_argument("uncoverable_set: need 1 <= d <= n");
    if (g.n > 20) throw std::invalid_argument("uncoverable_set: n too large");
    UncoverableSet out;
    out.n = g.n;
    out.d = d;
    out.uncoverable.assign(std::size_t{1} << g.n, true);
    detail::for_each_cover(g.n, d, [&](VertexSet delta, VertexSet omega) {
        out.uncoverable[(delta ^ neighborhood_set(g, omega)).bits] = false;
    });
    return out;
}

// Vertices: the empty set first, then every nonempty member of D_d passing
// Condition 1, ascending by mask. Edge rule: C ~ C' iff C △ C' ∈ D_d.
struct SuperGraph {
    Graph base;                       // the input graph
    int d = 0;
    std::vector<VertexSet> vertices;  // vertices[0] is the empty set
    std::vector<std::vector<std::uint64_t>> adj; // bitset rows over vertex indices
    UncoverableSet dd;
    std::vector<VertexSet> purity_basis; // GF(2) span basis of S_d

    std::size_t order() const { return vertices.size(); }
    bool connected(std::size_t a, std::size_t b) const {
        return (adj[a][b >> 6] >> (b & 63)) & 1u;
    }
};

inline SuperGraph build_super_graph(const Graph& g, int d) {
    SuperGraph sg;
    sg.base = g;
    sg.d = d;
    sg.dd = uncoverable_set(g, d);

    PuritySet sd = purity_set(g, d);
    {
        GF2Matrix m(static_cast<int>(sd.members.size()), g.n);
        for (std::size_t i = 0; i < sd.members.size(); ++i) m.row[i] = sd.members[i].bits;
        RrefResult r = rref(m);
        for (int i = 0; i < r.rank; ++i)
            sg.purity_basis.emplace_back(g.n, r.reduced.row[static_cast<std::size_t>(i)]);
    }

    sg.vertices.push_back(VertexSet::empty_set(g.n));
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.n); ++m) {
        if (!sg.dd.contains_mask(m)) continue;
        bool cond1 = true;
        for (const VertexSet& s : sg.purity_basis)
            if (std::popcount(s.bits & m) & 1) { cond1 = false; break; }
        if (cond1) sg.vertices.emplace_back(g.n, m);
    }

    const std::size_t order = sg.vertices.size();
    const std::size_t words = (order + 63) / 64;
    sg.adj.assign(order, std::vector<std::uint64_t>(words, 0));
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = a + 1; b < order; ++b) {
            std::uint64_t diff = sg.vertices[a].bits ^ sg.vertices[b].bits;
            if (sg.dd.contains_mask(diff)) {
                sg.adj[a][b >> 6] |= 1ull << (b & 63);
                sg.adj[b][a >> 6] |= 1ull << (a & 63);
            }
        }
    }
    return sg;
}

// A coding clique: member subsets satisfying Conditions 0-2 for (graph, d).
// When closed under symmetric difference it is a coding group and carries a
// canonical generator basis.
struct CodingClique {
    Graph graph;
    int d = 0;
    std::vector<VertexSet> members;   // sorted ascending by mask; members[0] = empty
    bool is_group = false;
    std::vector<VertexSet> generators; // greedy-minimal basis when is_group

    std::size_t K() const { return members.size(); }
    int k() const {
        std::size_t K_ = K();
        int k_ = 0;
        while ((std::size_t{1} << k_) < K_) ++k_;
        return k_;
    }
};

// Independent re-check of Conditions 0-2 straight from the definitions
// (no super graph involved). Every search result goes through this.
inline bool check_conditions(const Graph& g, int d, const std::vector<VertexSet>& members,
                             std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (members.empty() || !std::any_of(members.begin(), members.end(),
                                        [](const VertexSet& c) { return c.empty(); }))
        return fail("Condition 0: empty set not a member");
    PuritySet sd = purity_set(g, d);
    for (const VertexSet& c : members)
        for (const VertexSet& s : sd.members)
            if (parity_intersect(c, s)) return fail("Condition 1: odd purity overlap");
    UncoverableSet dd = uncoverable_set(g, d);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i] == members[j]) return fail("duplicate member");
            if (!dd.contains(members[i] ^ members[j]))
                return fail("Condition 2: coverable pair difference");
        }
    return true;
}

inline bool closed_under_sym_diff(const std::vector<VertexSet>& members) {
    std::vector<std::uint64_t> masks;
    masks.reserve(members.size());
    for (const VertexSet& c : members) masks.push_back(c.bits);
    std::sort(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i; j < masks.size(); ++j)
            if (!std::binary_search(masks.begin(), masks.end(), masks[i] ^ masks[j]))
                return false;
    return true;
}

// Greedy-minimal generator basis of a subgroup given as a member list.
inline std::vector<VertexSet> group_generators(const std::vector<VertexSet>& members) {
    std::vector<VertexSet> gens;
    std::vector<std::uint64_t> span{0};
    std::vector<VertexSet> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (const VertexSet& c : sorted) {
        if (c.empty()) continue;
        if (std::find(span.begin(), span.end(), c.bits) != span.end()) continue;
        gens.push_back(c);
        std::vector<std::uint64_t> grown = span;
        for (std::uint64_t m : span) grown.push_back(m ^ c.bits);
        span = std::move(grown);
    }
    return gens;
}

// LC rule: transport a clique along a local complementation at v. Member map
// is C -> C if v ∉ C, else C -> C △ N_v (N_v in the original graph). Valid
// on the complemented graph by construction; group structure is preserved.
inline CodingClique lc_transport(const CodingClique& clique, int v) {
    if (v < 0 || v >= clique.graph.n) throw std::out_of_range("lc_transport: vertex out of range");
    const VertexSet nv = clique.graph.neighbors(v);
    CodingClique out;
    out.graph = local_complement(clique.graph, v);
    out.d = clique.d;
    out.is_group = clique.is_group;
    for (const VertexSet& c : clique.members)
        out.members.push_back(c.contains(v) ? (c ^ nv) : c);
    std::sort(out.members.begin(), out.members.end());
    if (out.is_group) out.generators = group_generators(out.members);
    return out;
}

// All subgroups of dimension k whose nonzero elements are super-graph
// vertices (Conditions 1-2 are then automatic). Each subgroup is produced
// exactly once via its greedy-minimal ascending basis.
inline std::vector<CodingClique> find_coding_groups(const Graph& g, int d, int k) {
    if (k < 0 || k > g.n) throw std::invalid_argument("find_coding_groups: bad dimension");
    SuperGraph sg = build_super_graph(g, d);

    std::vector<std::uint64_t> verts; // nonempty super-graph vertices, ascending
    for (std::size_t i = 1; i < sg.vertices.size(); ++i) verts.push_back(sg.vertices[i].bits);

    std::vector<CodingClique> out;
    std::vector<std::uint64_t> members{0};
    std::vector<std::uint64_t> gens;

    auto emit = [&]() {
        CodingClique cc;
        cc.graph = g;
        cc.d = d;
        cc.is_group = true;
        std::vector<std::uint64_t> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint64_t m : sorted) cc.members.emplace_back(g.n, m);
        for (std::uint64_t m : gens) cc.generators.emplace_back(g.n, m);
        out.push_back(std::move(cc));
    };

    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t idx = start; idx < verts.size(); ++idx) {
            std::uint64_t c = verts[idx];
            // greedy-minimal basis: c must be below every coset image m ^ c,
            // which also rules out c already in the span
            bool canonical = true;
            for (std::uint64_t m : members)
                if ((m ^ c) < c) { canonical = false; break; }
            if (!canonical) continue;
            bool closed = true;
            for (std::uint64_t m : members) {
                if (m == 0) continue;
                std::uint64_t img = m ^ c;
                if (!sg.dd.contains_mask(img) ||
                    !std::binary_search(verts.begin(), verts.end(), img)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) continue;
            std::size_t old_size = members.size();
            for (std::size_t i = 0; i < old_size; ++i) members.push_back(members[i] ^ c);
            gens.push_back(c);
            self(self, idx + 1, remaining - 1);
            gens.pop_back();
            members.resize(old_size);
        }
    };
    rec(rec, 0, k);

    std::sort(out.begin(), out.end(), [](const CodingClique& a, const CodingClique& b) {
        return a.members < b.members;
    });
    return out;
}

} // namespace qgraph
