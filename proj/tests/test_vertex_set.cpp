#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgraph/vertex_set.hpp"

using namespace qgraph;

namespace {
VertexSet vs(std::initializer_list<int> vals, int n = 6) {
    return VertexSet::of(n, vals);
}
} // namespace

TEST_CASE("symmetric difference on hand-picked sets") {
    // {2,3,5} △ {3,4,1} = {1,2,4,5}   (1-indexed labels from the source data,
    // stored 0-indexed here)
    VertexSet a = vs({1, 2, 4});
    VertexSet b = vs({2, 3, 0});
    CHECK(sym_diff(a, b) == vs({0, 1, 3, 4}));
}

TEST_CASE("symmetric difference is self-inverse with identity element") {
    VertexSet a = vs({0, 2, 5});
    CHECK(sym_diff(a, a) == VertexSet::empty_set(6));
    CHECK(sym_diff(a, VertexSet::empty_set(6)) == a);
}

TEST_CASE("dimension mismatch is rejected") {
    VertexSet a = VertexSet::of(4, {1});
    VertexSet b = VertexSet::of(5, {1});
    CHECK_THROWS_AS(sym_diff(a, b), std::invalid_argument);
    CHECK_THROWS_AS(parity_intersect(a, b), std::invalid_argument);
}

TEST_CASE("parity of intersections") {
    CHECK(parity_intersect(vs({1, 2, 4}), vs({0, 2})) == 1);
    CHECK(parity_intersect(vs({1, 2, 4}), VertexSet::empty_set(6)) == 0);
    CHECK(parity_intersect(vs({0, 1}), vs({0, 1})) == 0);
}

TEST_CASE("symmetric difference is associative and commutative on random sets") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
        VertexSet a(n, rng() & mask), b(n, rng() & mask), c(n, rng() & mask);
        CHECK(sym_diff(sym_diff(a, b), c) == sym_diff(a, sym_diff(b, c)));
        CHECK(sym_diff(a, b) == sym_diff(b, a));
    }
}

TEST_CASE("parity_intersect equals popcount of AND mod 2, exhaustively to n=6") {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x)
            for (std::uint64_t y = 0; y < (1ull << n); ++y) {
                VertexSet a(n, x), b(n, y);
                REQUIRE(parity_intersect(a, b) == (std::popcount(x & y) & 1));
            }
    }
}

TEST_CASE("vertex enumeration is ascending") {
    VertexSet a = vs({5, 0, 3});
    CHECK(a.vertices() == std::vector<int>{0, 3, 5});
    CHECK(a.count() == 3);
}

TEST_CASE("out-of-range bits are rejected") {
    CHECK_THROWS_AS(VertexSet(3, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet::single(3, 3), std::out_of_range);
}
