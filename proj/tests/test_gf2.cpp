#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgraph/gf2_matrix.hpp"

using namespace qgraph;

TEST_CASE("rref of identity and zero matrices") {
    GF2Matrix id = GF2Matrix::identity(4);
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 4);
    CHECK(r.pivots == std::vector<int>{0, 1, 2, 3});

    GF2Matrix z(3, 5);
    RrefResult rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref of a rank-deficient matrix") {
    GF2Matrix m(2, 2);
    m.row[0] = 0b11;
    m.row[1] = 0b11;
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced.row[0] == 0b11);
    CHECK(r.reduced.row[1] == 0);
}

TEST_CASE("row-op record replays the elimination") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 10);
        GF2Matrix m(rows, cols);
        for (auto& row : m.row) row = rng() & m.col_mask();
        RrefResult r = rref(m);
        GF2Matrix replay = m;
        apply_row_ops(r.ops, replay);
        CHECK(replay == r.reduced);
        // idempotence
        RrefResult r2 = rref(r.reduced);
        CHECK(r2.reduced == r.reduced);
        CHECK(r2.rank == r.rank);
    }
}

TEST_CASE("solve_even_overlap with no constraints spans everything") {
    auto basis = solve_even_overlap({}, 3);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == VertexSet(3, 0b001));
    CHECK(basis[1] == VertexSet(3, 0b010));
    CHECK(basis[2] == VertexSet(3, 0b100));
}

TEST_CASE("solve_even_overlap against the full set on two vertices") {
    auto basis = solve_even_overlap({VertexSet::full_set(2)}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == VertexSet(2, 0b11));
    // exhaustive check over the 4 subsets: solutions are exactly {}, {1,2}
    for (std::uint64_t m = 0; m < 4; ++m) {
        bool even = (std::popcount(m & 0b11ull) & 1) == 0;
        bool in_span = (m == 0 || m == 0b11);
        CHECK(even == in_span);
    }
}

TEST_CASE("solution dimension is n minus rank, and members have even overlap") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        int k = static_cast<int>(rng() % (n + 1));
        std::vector<VertexSet> constraints;
        for (int i = 0; i < k; ++i)
            constraints.emplace_back(n, rng() & ((1ull << n) - 1));
        GF2Matrix m(k, n);
        for (int i = 0; i < k; ++i) m.row[static_cast<std::size_t>(i)] = constraints[static_cast<std::size_t>(i)].bits;
        int rank = rref(m).rank;
        auto basis = solve_even_overlap(constraints, n);
        REQUIRE(static_cast<int>(basis.size()) == n - rank);
        for (const auto& s : basis)
            for (const auto& c : constraints)
                CHECK(parity_intersect(s, c) == 0);
    }
}
