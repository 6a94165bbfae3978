#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgraph/vertex_set.hpp"

namespace qgraph {

// Dense GF(2) matrix with up to 64 columns, one machine word per row.
// Backs the standard-form reduction and the even-overlap solver; nothing
// here knows about graphs or codes.
struct GF2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> row;

    GF2Matrix() = default;
    GF2Matrix(int r, int c) : rows(r), cols(c), row(static_cast<std::size_t>(r), 0) {
        if (r < 0 || c < 0 || c > 64)
            throw std::invalid_argument("GF2Matrix: bad shape");
    }

    static GF2Matrix identity(int n) {
        GF2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.row[i] = 1ull << i;
        return m;
    }

    bool get(int r, int c) const { return (row[static_cast<std::size_t>(r)] >> c) & 1u; }
    void set(int r, int c, bool v) {
        std::uint64_t bit = 1ull << c;
        if (v) row[static_cast<std::size_t>(r)] |= bit;
        else   row[static_cast<std::size_t>(r)] &= ~bit;
    }

    std::uint64_t col_mask() const { return cols == 64 ? ~0ull : (1ull << cols) - 1; }

    bool operator==(const GF2Matrix& o) const {
        return rows == o.rows && cols == o.cols && row == o.row;
    }

    GF2Matrix transposed() const {
        if (rows > 64) throw std::invalid_argument("GF2Matrix: transpose needs rows <= 64");
        GF2Matrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    // this * other over GF(2); other has up to 64 columns.
    GF2Matrix multiplied(const GF2Matrix& other) const {
        if (cols != other.rows) throw std::invalid_argument("GF2Matrix: shape mismatch");
        GF2Matrix out(rows, other.cols);
        for (int r = 0; r < rows; ++r) {
            std::uint64_t acc = 0;
            std::uint64_t m = row[static_cast<std::size_t>(r)];
            while (m) {
                int c = std::countr_zero(m);
                m &= m - 1;
                acc ^= other.row[static_cast<std::size_t>(c)];
            }
            out.row[static_cast<std::size_t>(r)] = acc;
        }
        return out;
    }

    bool is_symmetric() const {
        for (int r = 0; r < rows; ++r)
            for (int c = r + 1; c < cols; ++c)
                if (get(r, c) != get(c, r)) return false;
        return true;
    }
};

// Elementary row operation; `add` means row i ^= row j.
struct RowOp {
    enum class Kind { swap, add };
    Kind kind;
    int i;
    int j;
};

inline void apply_row_ops(const std::vector<RowOp>& ops, GF2Matrix& m) {
    for (const RowOp& op : ops) {
        auto& a = m.row[static_cast<std::size_t>(op.i)];
        auto& b = m.row[static_cast<std::size_t>(op.j)];
        if (op.kind == RowOp::Kind::swap) std::swap(a, b);
        else a ^= b;
    }
}

struct RrefResult {
    GF2Matrix reduced;
    int rank = 0;
    std::vector<int> pivots;   // pivot column per pivot row, ascending
    std::vector<RowOp> ops;    // replaying these on the input yields `reduced`
};

// Reduced row echelon form with a replayable row-op log.
inline RrefResult rref(const GF2Matrix& input) {
    RrefResult res;
    res.reduced = input;
    GF2Matrix& m = res.reduced;
    int cur = 0;
    for (int col = 0; col < m.cols && cur < m.rows; ++col) {
        int pivot = -1;
        for (int r = cur; r < m.rows; ++r)
            if (m.get(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != cur) {
            std::swap(m.row[static_cast<std::size_t>(pivot)], m.row[static_cast<std::size_t>(cur)]);
            res.ops.push_back({RowOp::Kind::swap, cur, pivot});
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r != cur && m.get(r, col)) {
                m.row[static_cast<std::size_t>(r)] ^= m.row[static_cast<std::size_t>(cur)];
                res.ops.push_back({RowOp::Kind::add, r, cur});
            }
        }
        res.pivots.push_back(col);
        ++cur;
    }
    res.rank = cur;
    return res;
}

// Basis of {x : m x = 0} over GF(2), one word per vector, deterministic
// (free columns ascending).
inline std::vector<std::uint64_t> nullspace_basis(const GF2Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::uint64_t> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::uint64_t v = 1ull << c;
        for (int pr = 0; pr < r.rank; ++pr)
            if (r.reduced.get(pr, c)) v |= 1ull << r.pivots[static_cast<std::size_t>(pr)];
        basis.push_back(v);
    }
    return basis;
}

// Basis of {S ⊆ V : |S ∩ C_i| even for every constraint C_i}. With k
// independent constraints the solution space has dimension n-k; this is the
// stabilizer-extraction step of the group-to-check-matrix direction.
inline std::vector<VertexSet> solve_even_overlap(const std::vector<VertexSet>& constraints, int n) {
    GF2Matrix m(static_cast<int>(constraints.size()), n);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].n != n)
            throw std::invalid_argument("solve_even_overlap: dimension mismatch");
        m.row[i] = constraints[i].bits;
    }
    std::vector<VertexSet> basis;
    for (std::uint64_t v : nullspace_basis(m)) basis.emplace_back(n, v);
    return basis;
}

} // namespace qgraph
