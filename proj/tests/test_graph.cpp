#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgraph/graph.hpp"
#include "qgraph/graph6.hpp"

using namespace qgraph;

namespace {
Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}
} // namespace

TEST_CASE("loop family L5") {
    Graph l5 = family(FamilyKind::loop, 5);
    CHECK(l5.edge_count() == 5);
    for (int i = 0; i < 5; ++i) CHECK(l5.has_edge(i, (i + 1) % 5));
    // N_1 = {2,5} in 1-indexed labels -> N_0 = {1,4}
    CHECK(l5.neighbors(0) == VertexSet::of(5, {1, 4}));
}

TEST_CASE("star, complete and empty families") {
    Graph s = family(FamilyKind::star, 5);
    CHECK(s.degree(0) == 4);
    for (int i = 1; i < 5; ++i) CHECK(s.degree(i) == 1);
    CHECK(family(FamilyKind::complete, 3).edge_count() == 3);
    CHECK(family(FamilyKind::empty, 4).edge_count() == 0);
    CHECK_THROWS_AS(family_kind_from_name("banana"), std::invalid_argument);
}

TEST_CASE("neighborhood of a subset is the symmetric difference of rows") {
    Graph l5 = family(FamilyKind::loop, 5);
    CHECK(neighborhood_set(l5, VertexSet::of(5, {0})) == VertexSet::of(5, {1, 4}));
    CHECK(neighborhood_set(l5, VertexSet::empty_set(5)) == VertexSet::empty_set(5));
    // {1,2} 1-indexed: N_1 △ N_2 = {2,5} △ {1,3} = {1,2,3,5} -> 0-indexed {0,1,2,4}
    CHECK(neighborhood_set(l5, VertexSet::of(5, {0, 1})) == VertexSet::of(5, {0, 1, 2, 4}));
}

TEST_CASE("local complementation on the loop adds the chord") {
    Graph l5 = family(FamilyKind::loop, 5);
    Graph lc = local_complement(l5, 0); // N_0 = {1,4}, toggles edge {1,4}
    CHECK(lc.edge_count() == 6);
    CHECK(lc.has_edge(1, 4));
    for (int i = 0; i < 5; ++i) CHECK(lc.has_edge(i, (i + 1) % 5));
}

TEST_CASE("local complementation at a star center completes the leaves") {
    Graph s = family(FamilyKind::star, 5);
    Graph lc = local_complement(s, 0);
    for (int a = 1; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) CHECK(lc.has_edge(a, b));
    for (int i = 1; i < 5; ++i) CHECK(lc.has_edge(0, i));
}

TEST_CASE("local complementation is an involution preserving validity") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, rng);
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        Graph once = local_complement(g, v);
        CHECK(once.valid());
        CHECK(local_complement(once, v) == g);
        // LC at v fixes N_v and every edge not inside N_v
        CHECK(once.neighbors(v) == g.neighbors(v));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                bool inside = g.neighbors(v).contains(a) && g.neighbors(v).contains(b);
                if (!inside) CHECK(once.has_edge(a, b) == g.has_edge(a, b));
                else CHECK(once.has_edge(a, b) != g.has_edge(a, b));
            }
    }
}

TEST_CASE("components and connectivity") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(!is_connected(g));
    CHECK(is_connected(family(FamilyKind::loop, 5)));
    Graph u = disjoint_union(family(FamilyKind::loop, 3), family(FamilyKind::complete, 2));
    CHECK(u.n == 5);
    CHECK(u.edge_count() == 4);
    CHECK(!is_connected(u));
}

TEST_CASE("graph6 round trip is bit exact") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, rng);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 known encodings") {
    // L5 with the ring labeling 0-1-2-3-4-0 encodes as "Dhc"
    CHECK(to_graph6(family(FamilyKind::loop, 5)) == "Dhc");
    Graph parsed = from_graph6("Dhc");
    CHECK(parsed == family(FamilyKind::loop, 5));
    // "DqK" is a differently labeled 5-cycle
    Graph other = from_graph6("DqK");
    CHECK(other.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(other.degree(v) == 2);
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    CHECK_THROWS_AS(from_graph6("D"), parse_error);
    CHECK_THROWS_AS(from_graph6("Dq\x01"), parse_error);
}

TEST_CASE("graph6 handles 63 and 64 vertices") {
    std::mt19937 rng(5);
    for (int n : {63, 64}) {
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 7 == 0) g.add_edge(a, b);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("permutation relabels edges") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph q = permute(p3, {2, 0, 1}); // 0->2, 1->0, 2->1
    CHECK(q.has_edge(2, 0));
    CHECK(q.has_edge(0, 1));
    CHECK(!q.has_edge(1, 2));
}
