#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgraph/gauss.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/pauli.hpp"

namespace qgraph {

// Exact n-qubit state: amplitude of |mu> is amp[mu] / sqrt(2)^s with
// Gaussian-integer numerators. Kept to n <= 12 (4096 amplitudes); this is the
// brute-force side of every cross-check, deliberately independent of the
// phase-tracked combinatorial engine.
struct StateVector {
    static constexpr int max_qubits = 12;

    int n = 0;
    int s = 0;
    std::vector<GaussInt> amp;

    StateVector() = default;
    explicit StateVector(int n_qubits) : n(n_qubits), s(0) {
        if (n_qubits < 0 || n_qubits > max_qubits)
            throw std::invalid_argument("StateVector: supports at most 12 qubits");
        amp.assign(std::size_t{1} << n, GaussInt{});
    }

    std::size_t dim() const { return amp.size(); }

    // Squared norm times 2^s; unit norm means norm2_raw() == 2^s.
    std::int64_t norm2_raw() const {
        std::int64_t total = 0;
        for (const GaussInt& a : amp) total += a.norm2();
        return total;
    }
    bool is_normalized() const { return norm2_raw() == (std::int64_t{1} << s); }

    bool equals(const StateVector& o) const {
        if (n != o.n) return false;
        for (std::size_t m = 0; m < dim(); ++m)
            if (ScaledGauss(amp[m], s) != ScaledGauss(o.amp[m], o.s)) return false;
        return true;
    }
};

// |Gamma> per the quadratic-form expansion: amplitude of |mu> is
// (-1)^{#edges inside mu} / sqrt(2)^n.
inline StateVector graph_state(const Graph& g) {
    if (g.n > StateVector::max_qubits)
        throw std::invalid_argument("graph_state: too many qubits for the state-vector path");
    StateVector sv(g.n);
    sv.s = g.n;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu) {
        int twice_edges = 0;
        for (std::uint64_t m = mu; m; m &= m - 1) {
            int a = std::countr_zero(m);
            twice_edges += std::popcount(g.neighbors(a).bits & mu);
        }
        sv.amp[mu] = GaussInt{((twice_edges / 2) & 1) ? -1 : 1, 0};
    }
    return sv;
}

// |Gamma_C> = Z_C |Gamma>, the graph-state basis.
inline StateVector basis_state(const Graph& g, const VertexSet& c) {
    if (c.n != g.n) throw std::invalid_argument("basis_state: dimension mismatch");
    StateVector sv = graph_state(g);
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu)
        if (std::popcount(mu & c.bits) & 1) sv.amp[mu] = -sv.amp[mu];
    return sv;
}

inline StateVector apply_pauli(const PauliOperator& e, const StateVector& sv) {
    if (e.n() != sv.n) throw std::invalid_argument("apply_pauli: dimension mismatch");
    StateVector out(sv.n);
    out.s = sv.s;
    GaussInt phase = GaussInt::i_pow(e.phase_exp);
    for (std::uint64_t nu = 0; nu < sv.dim(); ++nu) {
        std::uint64_t src = nu ^ e.x.bits;
        GaussInt v = phase * sv.amp[src];
        if (std::popcount(e.z.bits & src) & 1) v = -v;
        out.amp[nu] = v;
    }
    return out;
}

// <a|b> as an exact scalar.
inline ScaledGauss inner_product(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("inner_product: dimension mismatch");
    GaussInt total{};
    for (std::size_t m = 0; m < a.dim(); ++m) total += a.amp[m].conj() * b.amp[m];
    return ScaledGauss(total, a.s + b.s);
}

// ---- single-qubit Clifford factors, used to realize recorded LCTs ----

inline void apply_hadamard(StateVector& sv, int q) {
    std::uint64_t bit = 1ull << q;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu) {
        if (mu & bit) continue;
        GaussInt a0 = sv.amp[mu], a1 = sv.amp[mu | bit];
        sv.amp[mu] = a0 + a1;
        sv.amp[mu | bit] = a0 - a1;
    }
    sv.s += 1;
}

// S† = diag(1, -i); conjugation sends Y -> X -> -Y and fixes Z.
inline void apply_s_dagger(StateVector& sv, int q) {
    std::uint64_t bit = 1ull << q;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu)
        if (mu & bit) sv.amp[mu] = sv.amp[mu] * GaussInt{0, -1};
}

// sqrt(-iX) = (I - iX)/sqrt(2)
inline void apply_sqrt_neg_ix(StateVector& sv, int q) {
    std::uint64_t bit = 1ull << q;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu) {
        if (mu & bit) continue;
        GaussInt a0 = sv.amp[mu], a1 = sv.amp[mu | bit];
        GaussInt i{0, 1};
        sv.amp[mu] = a0 - i * a1;
        sv.amp[mu | bit] = a1 - i * a0;
    }
    sv.s += 1;
}

// sqrt(iZ) = (I + iZ)/sqrt(2)
inline void apply_sqrt_iz(StateVector& sv, int q) {
    std::uint64_t bit = 1ull << q;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu) {
        GaussInt f = (mu & bit) ? GaussInt{1, -1} : GaussInt{1, 1};
        sv.amp[mu] = sv.amp[mu] * f;
    }
    sv.s += 1;
}

inline void apply_z_set(StateVector& sv, const VertexSet& c) {
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu)
        if (std::popcount(mu & c.bits) & 1) sv.amp[mu] = -sv.amp[mu];
}

// Relabel qubits with perm[old] = new.
inline StateVector apply_permutation(const StateVector& sv, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != sv.n)
        throw std::invalid_argument("apply_permutation: bad permutation size");
    StateVector out(sv.n);
    out.s = sv.s;
    for (std::uint64_t mu = 0; mu < sv.dim(); ++mu) {
        std::uint64_t nu = 0;
        for (int q = 0; q < sv.n; ++q)
            if ((mu >> q) & 1) nu |= 1ull << perm[static_cast<std::size_t>(q)];
        out.amp[nu] = sv.amp[mu];
    }
    return out;
}

} // namespace qgraph
