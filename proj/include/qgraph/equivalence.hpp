#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/canonical.hpp"
#include "qgraph/code_search.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

// One move in an equivalence witness: a local complementation (with clique
// transport) or a member shift C -> C △ M (the Z_M local unitary, which
// re-normalizes which member plays the role of the empty set).
struct EquivalenceMove {
    enum class Kind { local_complement, member_shift };
    Kind kind;
    VertexSet detail; // the LC vertex (as a singleton) or the shift member
};

namespace detail {

inline std::vector<VertexSet> shift_members(const std::vector<VertexSet>& members,
                                            const VertexSet& m) {
    std::vector<VertexSet> out;
    out.reserve(members.size());
    for (const VertexSet& c : members) out.push_back(c ^ m);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Breadth-first search for a local-Clifford + permutation witness that two
// graph codes span equivalent subspaces. Moves: LC at any vertex and shifts
// by any member; relabelings are absorbed by the joint canonical form. A
// found witness certifies equivalence; exhausting the orbit (within the node
// cap) certifies there is no witness of this form.
struct EquivalenceWitness {
    bool equivalent = false;
    bool exhausted = false; // orbit fully explored without finding the target
    std::size_t visited = 0;
};

inline EquivalenceWitness equivalent_codes(const Graph& ga, const std::vector<VertexSet>& ma,
                                           const Graph& gb, const std::vector<VertexSet>& mb,
                                           std::size_t node_cap = 200000) {
    EquivalenceWitness out;
    if (ga.n != gb.n || ma.size() != mb.size()) {
        out.exhausted = true;
        return out;
    }
    CodeCanonicalForm target = code_canonical_form(gb, mb);

    std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, bool> seen;
    auto key_of = [](const CodeCanonicalForm& cf) {
        std::vector<std::uint64_t> gk;
        gk.push_back(static_cast<std::uint64_t>(cf.graph.n));
        for (const VertexSet& row : cf.graph.adj) gk.push_back(row.bits);
        return std::make_pair(gk, cf.members);
    };
    auto target_key = key_of(target);

    struct Node {
        Graph g;
        std::vector<VertexSet> members;
    };
    std::vector<Node> frontier{{ga, ma}};
    {
        CodeCanonicalForm cf = code_canonical_form(ga, ma);
        auto k = key_of(cf);
        if (k == target_key) {
            out.equivalent = true;
            return out;
        }
        seen.emplace(std::move(k), true);
    }

    while (!frontier.empty() && seen.size() < node_cap) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            std::vector<Node> images;
            for (int v = 0; v < node.g.n; ++v) {
                CodingClique cc;
                cc.graph = node.g;
                cc.members = node.members;
                cc.d = 1;
                CodingClique moved = lc_transport(cc, v);
                images.push_back({moved.graph, moved.members});
            }
            for (const VertexSet& m : node.members) {
                if (m.empty()) continue;
                images.push_back({node.g, detail::shift_members(node.members, m)});
            }
            for (Node& img : images) {
                CodeCanonicalForm cf = code_canonical_form(img.g, img.members);
                auto k = key_of(cf);
                if (k == target_key) {
                    out.equivalent = true;
                    out.visited = seen.size();
                    return out;
                }
                if (seen.emplace(std::move(k), true).second) next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
    }
    out.visited = seen.size();
    out.exhausted = frontier.empty();
    return out;
}

} // namespace qgraph
