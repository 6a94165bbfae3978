#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "qgraph/code_search.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/gf2_matrix.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/graph_state.hpp"
#include "qgraph/invariants.hpp"
#include "qgraph/pauli.hpp"

namespace qgraph {

// Stabilizer generators as phased Pauli rows. Valid when the rows are
// Hermitian, pairwise commuting and independent over the GF(2) symplectic
// representation; the group then fixes a 2^k dimensional code, k = n - rows.
struct CheckMatrix {
    int n = 0;
    std::vector<PauliOperator> rows;

    CheckMatrix() = default;
    CheckMatrix(int n_qubits, std::vector<PauliOperator> generators)
        : n(n_qubits), rows(std::move(generators)) {}

    int r() const { return static_cast<int>(rows.size()); }
    int k() const { return n - r(); }

    void validate() const {
        for (const PauliOperator& p : rows) {
            if (p.n() != n) throw verify_error("check matrix: row dimension mismatch");
            if (!p.is_hermitian()) throw verify_error("check matrix: non-Hermitian generator");
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (!rows[i].commutes_with(rows[j]))
                    throw verify_error("check matrix: non-commuting generators");
        if (symplectic_rank() != r())
            throw verify_error("check matrix: dependent generators");
    }

    int symplectic_rank() const {
        GF2Matrix m(r(), 2 * n > 64 ? 64 : 2 * n);
        if (2 * n > 64) {
            // wide case: eliminate on a two-word representation
            std::vector<std::pair<std::uint64_t, std::uint64_t>> w;
            for (const PauliOperator& p : rows) w.emplace_back(p.x.bits, p.z.bits);
            int rank = 0;
            for (int col = 0; col < 2 * n; ++col) {
                bool xside = col < n;
                int bit = xside ? col : col - n;
                int pivot = -1;
                for (int row = rank; row < static_cast<int>(w.size()); ++row) {
                    std::uint64_t v = xside ? w[static_cast<std::size_t>(row)].first
                                            : w[static_cast<std::size_t>(row)].second;
                    if ((v >> bit) & 1) { pivot = row; break; }
                }
                if (pivot < 0) continue;
                std::swap(w[static_cast<std::size_t>(pivot)], w[static_cast<std::size_t>(rank)]);
                for (int row = 0; row < static_cast<int>(w.size()); ++row) {
                    if (row == rank) continue;
                    std::uint64_t v = xside ? w[static_cast<std::size_t>(row)].first
                                            : w[static_cast<std::size_t>(row)].second;
                    if ((v >> bit) & 1) {
                        w[static_cast<std::size_t>(row)].first ^= w[static_cast<std::size_t>(rank)].first;
                        w[static_cast<std::size_t>(row)].second ^= w[static_cast<std::size_t>(rank)].second;
                    }
                }
                ++rank;
            }
            return rank;
        }
        for (int i = 0; i < r(); ++i)
            m.row[static_cast<std::size_t>(i)] =
                rows[static_cast<std::size_t>(i)].x.bits |
                (rows[static_cast<std::size_t>(i)].z.bits << n);
        return rref(m).rank;
    }

    // One generator per line; blank lines and '#' comments ignored.
    static CheckMatrix parse_text(const std::string& text) {
        std::vector<PauliOperator> rows;
        int n = -1;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            std::size_t start = line.find_first_not_of(' ');
            if (start == std::string::npos || line[start] == '#') continue;
            PauliOperator p = PauliOperator::parse(line.substr(start), n);
            n = p.n();
            rows.push_back(p);
        }
        if (rows.empty()) throw parse_error("check matrix: no generators");
        return CheckMatrix(n, std::move(rows));
    }

    std::string emit_text() const {
        std::string out;
        for (const PauliOperator& p : rows) out += p.str() + "\n";
        return out;
    }
};

// Log of the local Clifford + bookkeeping transforms applied while reducing
// a check matrix. Replay order: qubit permutation, Hadamards, S-daggers,
// then row multiplications; coset_shift is the final Z correction relating
// the produced group code to the transformed input code.
struct LctLog {
    std::vector<int> perm;     // perm[old] = new
    VertexSet hadamard;        // in final labels
    VertexSet s_dagger;        // in final labels
    std::vector<RowOp> row_ops;
    VertexSet coset_shift;     // empty unless produced by stabilizer_to_graph
};

inline PauliOperator permute(const PauliOperator& p, const std::vector<int>& perm) {
    return PauliOperator(permute(p.x, perm), permute(p.z, perm), p.phase_exp);
}

// Conjugate by H on each qubit of h: swaps the X/Z roles, Y picks up a sign.
inline PauliOperator conjugate_hadamard(const PauliOperator& p, const VertexSet& h) {
    VertexSet xin = p.x & h, zin = p.z & h;
    VertexSet nx = (p.x & h.complement()) | zin;
    VertexSet nz = (p.z & h.complement()) | xin;
    return PauliOperator(nx, nz, p.phase_exp + 2 * (xin & zin).count());
}

// Conjugate by S† on each qubit of s: sends Y -> X -> -Y, fixes Z.
inline PauliOperator conjugate_s_dagger(const PauliOperator& p, const VertexSet& s) {
    VertexSet flips = p.x & s;
    return PauliOperator(p.x, p.z ^ flips, p.phase_exp + 3 * flips.count());
}

inline CheckMatrix apply_log(const LctLog& log, const CheckMatrix& cm) {
    CheckMatrix out = cm;
    for (PauliOperator& p : out.rows) {
        if (!log.perm.empty()) p = permute(p, log.perm);
        p = conjugate_hadamard(p, log.hadamard);
        p = conjugate_s_dagger(p, log.s_dagger);
    }
    for (const RowOp& op : log.row_ops) {
        auto& a = out.rows[static_cast<std::size_t>(op.i)];
        auto& b = out.rows[static_cast<std::size_t>(op.j)];
        if (op.kind == RowOp::Kind::swap) std::swap(a, b);
        else a = a * b;
    }
    return out;
}

// The standard form [ I_r  A | D + A E^T  E ] with D and the free logical
// block F symmetric. `transformed` keeps the exactly phased generator rows
// after the recorded transforms.
struct StandardForm {
    int n = 0;
    int r = 0;
    int k = 0;
    GF2Matrix A; // r x k
    GF2Matrix D; // r x r, symmetric
    GF2Matrix E; // r x k
    LctLog log;
    std::vector<PauliOperator> transformed;
};

inline StandardForm standard_form(const CheckMatrix& cm) {
    cm.validate();
    const int n = cm.n;
    const int r = cm.r();
    const int k = cm.k();

    std::vector<PauliOperator> rows = cm.rows;
    LctLog log;

    auto x_bit = [&](int row, int col) { return rows[static_cast<std::size_t>(row)].x.contains(col); };
    auto z_bit = [&](int row, int col) { return rows[static_cast<std::size_t>(row)].z.contains(col); };
    auto row_mul = [&](int i, int j) {
        rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] * rows[static_cast<std::size_t>(j)];
        log.row_ops.push_back({RowOp::Kind::add, i, j});
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        std::swap(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
        log.row_ops.push_back({RowOp::Kind::swap, i, j});
    };

    // helper: eliminate to echelon form on the X side over a column window,
    // returning the pivot columns
    auto eliminate_x = [&](int row_from, int col_from) {
        std::vector<int> pivots;
        int cur = row_from;
        for (int col = col_from; col < n && cur < r; ++col) {
            int pivot = -1;
            for (int row = cur; row < r; ++row)
                if (x_bit(row, col)) { pivot = row; break; }
            if (pivot < 0) continue;
            row_swap(pivot, cur);
            for (int row = 0; row < r; ++row)
                if (row != cur && x_bit(row, col)) row_mul(row, cur);
            pivots.push_back(col);
            ++cur;
        }
        return pivots;
    };

    // stage 1: echelonize the X block, permute its pivots to the front
    std::vector<int> xpiv = eliminate_x(0, 0);
    const int r1 = static_cast<int>(xpiv.size());
    {
        std::vector<int> perm(static_cast<std::size_t>(n), -1);
        int next = 0;
        for (int col : xpiv) perm[static_cast<std::size_t>(col)] = next++;
        for (int col = 0; col < n; ++col)
            if (perm[static_cast<std::size_t>(col)] < 0) perm[static_cast<std::size_t>(col)] = next++;
        for (PauliOperator& p : rows) p = permute(p, perm);
        log.perm = perm;
    }

    // stage 2: rows below r1 have empty X part; echelonize their Z block on
    // the columns >= r1 (full rank by commutativity) and bring those pivots
    // to positions r1..r-1
    {
        std::vector<int> zpiv;
        int cur = r1;
        for (int col = r1; col < n && cur < r; ++col) {
            int pivot = -1;
            for (int row = cur; row < r; ++row)
                if (z_bit(row, col)) { pivot = row; break; }
            if (pivot < 0) continue;
            row_swap(pivot, cur);
            for (int row = 0; row < r; ++row)
                if (row != cur && z_bit(row, col)) row_mul(row, cur);
            zpiv.push_back(col);
            ++cur;
        }
        if (cur != r) throw verify_error("standard_form: generators not reducible (invalid stabilizer)");
        std::vector<int> perm(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < r1; ++i) perm[static_cast<std::size_t>(i)] = i;
        int next = r1;
        for (int col : zpiv) perm[static_cast<std::size_t>(col)] = next++;
        for (int col = r1; col < n; ++col)
            if (perm[static_cast<std::size_t>(col)] < 0) perm[static_cast<std::size_t>(col)] = next++;
        for (PauliOperator& p : rows) p = permute(p, perm);
        // compose into the logged permutation
        std::vector<int> total(static_cast<std::size_t>(n));
        for (int old = 0; old < n; ++old)
            total[static_cast<std::size_t>(old)] = perm[static_cast<std::size_t>(log.perm[static_cast<std::size_t>(old)])];
        log.perm = total;
    }

    // stage 3: Hadamards on positions r1..r-1 turn the Z pivots into X ones
    {
        VertexSet h = VertexSet::empty_set(n);
        for (int q = r1; q < r; ++q) h.add(q);
        for (PauliOperator& p : rows) p = conjugate_hadamard(p, h);
        log.hadamard = h;
    }

    // stage 4: final X elimination gives [I_r | A]
    {
        std::vector<int> piv = eliminate_x(0, 0);
        if (static_cast<int>(piv.size()) != r)
            throw verify_error("standard_form: X block failed to reach full rank");
        for (int i = 0; i < r; ++i)
            if (piv[static_cast<std::size_t>(i)] != i)
                throw verify_error("standard_form: pivots not in leading columns");
    }

    StandardForm sf;
    sf.n = n;
    sf.r = r;
    sf.k = k;
    sf.A = GF2Matrix(r, k);
    sf.D = GF2Matrix(r, r);
    sf.E = GF2Matrix(r, k);
    GF2Matrix dtilde(r, r);
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c < k; ++c) {
            sf.A.set(i, c, rows[static_cast<std::size_t>(i)].x.contains(r + c));
            sf.E.set(i, c, rows[static_cast<std::size_t>(i)].z.contains(r + c));
        }
        for (int c = 0; c < r; ++c)
            dtilde.set(i, c, rows[static_cast<std::size_t>(i)].z.contains(c));
    }
    // D = D~ + A E^T must come out symmetric for commuting generators
    GF2Matrix aet = sf.A.multiplied(sf.E.transposed());
    sf.D = dtilde;
    for (int i = 0; i < r; ++i) sf.D.row[static_cast<std::size_t>(i)] ^= aet.row[static_cast<std::size_t>(i)];
    if (!sf.D.is_symmetric())
        throw verify_error("standard_form: D block not symmetric (invalid stabilizer)");
    sf.log = log;
    sf.transformed = rows;
    return sf;
}

// The n-k stabilizer generators written as vertex-stabilizer products
// G_a * prod_c G_{r+c}^{A_ac} on the produced graph.
inline std::vector<PauliOperator> graph_generators(const Graph& g, const StandardForm& sf) {
    if (g.n != sf.n) throw std::invalid_argument("graph_generators: shape mismatch");
    std::vector<PauliOperator> out;
    for (int a = 0; a < sf.r; ++a) {
        VertexSet sel = VertexSet::single(g.n, a);
        for (int c = 0; c < sf.k; ++c)
            if (sf.A.get(a, c)) sel.add(sf.r + c);
        out.push_back(stabilizer_product(g, sel));
    }
    return out;
}

struct GraphCodeResult {
    Graph graph;
    CodingClique group;
    StandardForm sf;
    GF2Matrix F;       // the symmetric logical choice used
    LctLog log;        // sf.log plus S-dagger set and coset shift
};

// Theorem-2 direction: check matrix -> graph + coding group. The group code
// of the output equals the input code transformed by the recorded local
// Cliffords (perm, H, S†) followed by the recorded Z coset shift.
inline GraphCodeResult stabilizer_to_graph(const CheckMatrix& cm,
                                           const GF2Matrix* F_choice = nullptr) {
    GraphCodeResult res;
    res.sf = standard_form(cm);
    const int n = res.sf.n, r = res.sf.r, k = res.sf.k;

    res.F = F_choice ? *F_choice : GF2Matrix(k, k);
    if (res.F.rows != k || res.F.cols != k || !res.F.is_symmetric())
        throw std::invalid_argument("stabilizer_to_graph: F must be symmetric k x k");

    // Gamma = [ D + A F A^T , E + A F ; (E + A F)^T , F ]
    GF2Matrix af = res.sf.A.multiplied(res.F);                       // r x k
    GF2Matrix afat = af.multiplied(res.sf.A.transposed());           // r x r
    GF2Matrix upper_left = res.sf.D;
    for (int i = 0; i < r; ++i) upper_left.row[static_cast<std::size_t>(i)] ^= afat.row[static_cast<std::size_t>(i)];
    GF2Matrix upper_right = res.sf.E;                                // r x k
    for (int i = 0; i < r; ++i) upper_right.row[static_cast<std::size_t>(i)] ^= af.row[static_cast<std::size_t>(i)];

    Graph g(n);
    VertexSet sdag = VertexSet::empty_set(n);
    auto gamma_bit = [&](int a, int b) -> bool {
        if (a < r && b < r) return upper_left.get(a, b);
        if (a < r && b >= r) return upper_right.get(a, b - r);
        if (a >= r && b < r) return upper_right.get(b, a - r);
        return res.F.get(a - r, b - r);
    };
    for (int a = 0; a < n; ++a) {
        if (gamma_bit(a, a)) sdag.add(a); // cleared by the S† local Clifford
        for (int b = a + 1; b < n; ++b)
            if (gamma_bit(a, b)) g.add_edge(a, b);
    }
    res.graph = g;

    // transformed generator rows, now also conjugated by the S† set
    std::vector<PauliOperator> rows = res.sf.transformed;
    for (PauliOperator& p : rows) p = conjugate_s_dagger(p, sdag);

    // each row must match its vertex-stabilizer product up to a sign; the
    // signs select the coset of the graph-state basis the input stabilizes
    VertexSet coset = VertexSet::empty_set(n);
    for (int a = 0; a < r; ++a) {
        PauliOperator expected = stabilizer_product(g, rows[static_cast<std::size_t>(a)].x);
        if (expected.x != rows[static_cast<std::size_t>(a)].x || expected.z != rows[static_cast<std::size_t>(a)].z)
            throw verify_error("stabilizer_to_graph: assembled graph inconsistent with generators");
        int delta = ((rows[static_cast<std::size_t>(a)].phase_exp - expected.phase_exp) % 4 + 4) % 4;
        if (delta == 1 || delta == 3)
            throw verify_error("stabilizer_to_graph: imaginary generator ratio");
        if (delta == 2) coset.add(a); // row = -G-product: flips the eigenvalue on qubit a
    }

    res.log = res.sf.log;
    res.log.s_dagger = sdag;
    res.log.coset_shift = coset;

    CodingClique group;
    group.graph = g;
    group.is_group = true;
    for (int m = 0; m < k; ++m) {
        VertexSet c = VertexSet::single(n, r + m);
        for (int a = 0; a < r; ++a)
            if (res.sf.A.get(a, m)) c.add(a);
        group.generators.push_back(c);
    }
    // expand members
    group.members.emplace_back(VertexSet::empty_set(n));
    for (const VertexSet& gen : group.generators) {
        std::size_t sz = group.members.size();
        for (std::size_t i = 0; i < sz; ++i) group.members.push_back(group.members[i] ^ gen);
    }
    std::sort(group.members.begin(), group.members.end());
    group.generators = group_generators(group.members);
    group.d = code_distance(g, group.members);
    res.group = group;
    return res;
}

// Theorem-2 converse: coding group -> stabilizer generators G_{S_i}, with
// phases tracked so the joint +1 eigenspace is exactly the spanned code.
inline CheckMatrix group_to_stabilizer(const Graph& g, const CodingClique& group) {
    if (!group.is_group || !closed_under_sym_diff(group.members))
        throw verify_error("group_to_stabilizer: members do not form a group");
    std::vector<VertexSet> duals = solve_even_overlap(group.members, g.n);
    std::vector<PauliOperator> rows;
    rows.reserve(duals.size());
    for (const VertexSet& s : duals) rows.push_back(stabilizer_product(g, s));
    return CheckMatrix(g.n, std::move(rows));
}

// The LU + permutation invariant fingerprint of a verified code.
inline CodeInvariants equivalence_fingerprint(const Graph& g, const std::vector<VertexSet>& basis) {
    return code_invariants(g, basis);
}

} // namespace qgraph
