#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgraph/code_search.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/invariants.hpp"
#include "qgraph/pauli.hpp"
#include "qgraph/rational.hpp"
#include "qgraph/stabilizer.hpp"

namespace qgraph {

using json = nlohmann::json;

// All external JSON uses the 1-indexed vertex labels of the source tables;
// everything internal stays 0-indexed.

inline json vertex_set_to_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v + 1); });
    return arr;
}

inline VertexSet vertex_set_from_json(const json& arr, int n) {
    if (!arr.is_array()) throw parse_error("vertex set: expected an array");
    VertexSet out = VertexSet::empty_set(n);
    for (const auto& e : arr) {
        if (!e.is_number_integer()) throw parse_error("vertex set: expected integers");
        int v = e.get<int>();
        if (v < 1 || v > n) throw parse_error("vertex set: vertex label out of range");
        out.add(v - 1);
    }
    return out;
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a + 1, b + 1}));
    return json{{"n", g.n}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph: expected {\"n\", \"edges\"}");
    int n = j.at("n").get<int>();
    if (n < 1 || n > VertexSet::max_vertices) throw parse_error("graph: bad vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("graph: bad edge entry");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || a > n || b < 1 || b > n || a == b) throw parse_error("graph: bad edge");
        if (!g.has_edge(a - 1, b - 1)) g.add_edge(a - 1, b - 1);
    }
    return g;
}

inline json members_to_json(const std::vector<VertexSet>& members) {
    json arr = json::array();
    for (const VertexSet& m : members) arr.push_back(vertex_set_to_json(m));
    return arr;
}

inline std::vector<VertexSet> members_from_json(const json& arr, int n) {
    if (!arr.is_array()) throw parse_error("clique: expected an array of vertex sets");
    std::vector<VertexSet> out;
    for (const auto& e : arr) out.push_back(vertex_set_from_json(e, n));
    return out;
}

// Canonical code document: members sorted ascending, 1-indexed.
inline json code_to_json(const CodingClique& code, const std::string& name = "") {
    json j;
    if (!name.empty()) j["name"] = name;
    j["n"] = code.graph.n;
    j["d"] = code.d;
    j["K"] = code.members.size();
    j["graph"] = graph_to_json(code.graph);
    j["graph6"] = to_graph6(code.graph);
    j["kind"] = code.is_group ? "group" : "clique";
    std::vector<VertexSet> sorted = code.members;
    std::sort(sorted.begin(), sorted.end());
    j["clique"] = members_to_json(sorted);
    if (code.is_group) j["generators"] = members_to_json(code.generators);
    return j;
}

inline CodingClique code_from_json(const json& j) {
    CodingClique code;
    code.graph = graph_from_json(j.at("graph"));
    code.d = j.at("d").get<int>();
    code.members = members_from_json(j.at("clique"), code.graph.n);
    std::sort(code.members.begin(), code.members.end());
    code.is_group = j.contains("kind") ? (j.at("kind").get<std::string>() == "group")
                                       : closed_under_sym_diff(code.members);
    if (code.is_group) code.generators = group_generators(code.members);
    return code;
}

inline json pauli_to_json(const PauliOperator& p) {
    static const char* prefix[4] = {"+", "i", "-", "-i"};
    int ys = (p.x & p.z).count();
    return json{{"x", vertex_set_to_json(p.x)},
                {"z", vertex_set_to_json(p.z)},
                {"phase", prefix[((p.phase_exp - ys) % 4 + 4) % 4]},
                {"text", p.str()}};
}

inline PauliOperator pauli_from_json(const json& j, int n) {
    VertexSet x = vertex_set_from_json(j.at("x"), n);
    VertexSet z = vertex_set_from_json(j.at("z"), n);
    int e = 0;
    if (j.contains("phase")) {
        std::string ph = j.at("phase").get<std::string>();
        if (ph == "+" || ph == "") e = 0;
        else if (ph == "i" || ph == "+i") e = 1;
        else if (ph == "-") e = 2;
        else if (ph == "-i") e = 3;
        else throw parse_error("pauli: bad phase");
    }
    return PauliOperator(x, z, e + (x & z).count());
}

inline json check_matrix_to_json(const CheckMatrix& cm) {
    json rows = json::array();
    for (const PauliOperator& p : cm.rows) rows.push_back(pauli_to_json(p));
    return json{{"n", cm.n}, {"rows", rows}};
}

inline CheckMatrix check_matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<PauliOperator> rows;
    for (const auto& e : j.at("rows")) rows.push_back(pauli_from_json(e, n));
    if (rows.empty()) throw parse_error("check matrix: no rows");
    return CheckMatrix(n, std::move(rows));
}

inline json rational_to_json(const Rational& r) { return r.str(); }

inline json weights_to_json(const std::vector<Rational>& A) {
    json arr = json::array();
    for (const Rational& a : A) arr.push_back(a.str());
    return arr;
}

inline json invariants_to_json(const CodeInvariants& inv) {
    json freq = json::array();
    for (std::size_t d = 0; d < inv.freq.size(); ++d) {
        json per_card = json::array();
        for (const auto& series : inv.freq[d]) {
            json s = json::array();
            for (const Rational& f : series) s.push_back(f.str());
            per_card.push_back(s);
        }
        freq.push_back(json{{"d", d + 1}, {"by_cardinality", per_card}});
    }
    return json{{"n", inv.n}, {"K", inv.K}, {"A", weights_to_json(inv.A)}, {"freq", freq}};
}

inline json gf2_to_json(const GF2Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        std::string bits;
        for (int c = 0; c < m.cols; ++c) bits.push_back(m.get(i, c) ? '1' : '0');
        rows.push_back(bits);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"bits", rows}};
}

} // namespace qgraph
