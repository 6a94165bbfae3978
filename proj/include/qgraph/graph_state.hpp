#pragma once

#include <optional>
#include <vector>

#include "qgraph/gauss.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/pauli.hpp"
#include "qgraph/vertex_set.hpp"

namespace qgraph {

// Fourth root of unity or zero; the only values a graph-state matrix element
// can take.
struct PhaseOrZero {
    bool zero = true;
    int exp = 0; // exponent of i when nonzero

    static PhaseOrZero make_zero() { return {}; }
    static PhaseOrZero phase(int e) { return {false, ((e % 4) + 4) % 4}; }

    GaussInt value() const { return zero ? GaussInt{} : GaussInt::i_pow(exp); }

    bool operator==(const PhaseOrZero& o) const {
        return zero == o.zero && (zero || exp == o.exp);
    }
    bool operator!=(const PhaseOrZero& o) const { return !(*this == o); }
};

// The product G_omega = prod_{v in omega} G_v of vertex stabilizers, with its
// exact accumulated phase. The G_v commute pairwise, so the result does not
// depend on the multiplication order (tested).
inline PauliOperator vertex_stabilizer(const Graph& g, int v) {
    return PauliOperator(VertexSet::single(g.n, v), g.neighbors(v), 0);
}

inline PauliOperator stabilizer_product(const Graph& g, const VertexSet& omega) {
    PauliOperator acc = PauliOperator::identity(g.n);
    omega.for_each([&](int v) { acc = acc * vertex_stabilizer(g, v); });
    return acc;
}

struct Pushthrough {
    VertexSet omega_image; // Omega = delta △ N_omega
    int sigma_exp = 0;     // X_w Z_d |G> = i^sigma_exp Z_Omega |G> (e's phase included)
};

// Replace the X part of an error by phase flips: E|G> = sigma * Z_Omega |G>.
// Derivation: X_w = i^{-e_w} G_w Z_{N_w} with G_w = i^{e_w} X_w Z_{N_w}, and
// commuting G_w past Z_T costs (-1)^{|w ∩ T|}; G_w fixes |G>.
inline Pushthrough pauli_pushthrough(const Graph& g, const PauliOperator& e) {
    if (e.n() != g.n) throw std::invalid_argument("pauli_pushthrough: dimension mismatch");
    PauliOperator gw = stabilizer_product(g, e.x);
    VertexSet omega_image = e.z ^ gw.z; // delta △ N_omega
    int sign = parity_intersect(e.x, omega_image);
    int sigma = e.phase_exp - gw.phase_exp + 2 * sign;
    return {omega_image, ((sigma % 4) + 4) % 4};
}

// <Gamma_a| E |Gamma_b> evaluated combinatorially: zero unless a △ b equals
// the pushthrough image Omega, in which case it is a fourth root of unity.
inline PhaseOrZero overlap(const Graph& g, const VertexSet& a, const PauliOperator& e,
                           const VertexSet& b) {
    Pushthrough pt = pauli_pushthrough(g, e);
    if ((a ^ b) != pt.omega_image) return PhaseOrZero::make_zero();
    // E|G_b> = sigma (-1)^{|x ∩ b|} |G_{Omega △ b}>
    return PhaseOrZero::phase(pt.sigma_exp + 2 * parity_intersect(e.x, b));
}

// ---- Knill-Laflamme verification over the graph-state basis ----

struct KlViolation {
    enum class Kind { off_diagonal, diagonal_mismatch };
    Kind kind;
    PauliOperator error;
    int i = 0; // basis indices (0-based); i == j flags a diagonal mismatch
    int j = 0;
};

struct KlVerdict {
    bool accepted = true;
    std::optional<KlViolation> violation;
};

namespace detail {

// Visit every (delta, omega) pair with |delta ∪ omega| < d, i.e. all error
// letter patterns of weight below the target distance. 3^w patterns per
// support of size w.
template <typename F>
void for_each_cover(int n, int d, F&& visit) {
    // supports by increasing weight; within a support, qubits take one of
    // X / Y / Z, encoded by membership in (omega-only, both, delta-only).
    std::vector<int> members;
    auto rec_support = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            // assign letters over the chosen support
            int w = static_cast<int>(members.size());
            std::vector<int> letter(static_cast<std::size_t>(w), 0);
            for (;;) {
                std::uint64_t xbits = 0, zbits = 0;
                for (int k = 0; k < w; ++k) {
                    std::uint64_t bit = 1ull << members[static_cast<std::size_t>(k)];
                    switch (letter[static_cast<std::size_t>(k)]) {
                        case 0: xbits |= bit; break;            // X
                        case 1: xbits |= bit; zbits |= bit; break; // Y
                        default: zbits |= bit; break;           // Z
                    }
                }
                visit(VertexSet(n, zbits), VertexSet(n, xbits));
                int k = 0;
                while (k < w && letter[static_cast<std::size_t>(k)] == 2)
                    letter[static_cast<std::size_t>(k++)] = 0;
                if (k == w) break;
                ++letter[static_cast<std::size_t>(k)];
            }
            return;
        }
        for (int v = start; v <= n - remaining; ++v) {
            members.push_back(v);
            self(self, v + 1, remaining - 1);
            members.pop_back();
        }
    };
    for (int w = 0; w < d; ++w) rec_support(rec_support, 0, w);
}

} // namespace detail

// Exact KL check through the combinatorial engine. Accepted iff every
// Hermitian Pauli of weight < d acts on the spanned subspace as f(E) times
// the identity. Off-diagonal hits and diagonal disagreements are both
// reported as concrete witnesses; a diagonal disagreement (possible only for
// bases violating Condition 1) is flagged with i == j.
inline KlVerdict kl_verify(const Graph& g, const std::vector<VertexSet>& basis, int d) {
    if (d < 1) throw std::invalid_argument("kl_verify: need d >= 1");
    for (const VertexSet& c : basis)
        if (c.n != g.n) throw std::invalid_argument("kl_verify: dimension mismatch");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] == basis[j])
                throw std::invalid_argument("kl_verify: duplicate basis elements");

    // pair differences C_i △ C_j, remembering one witnessing pair each
    const std::size_t K = basis.size();
    std::vector<std::uint64_t> diff_masks;
    std::vector<std::pair<int, int>> diff_witness;
    if (g.n <= 20) {
        std::vector<int> seen(std::size_t{1} << g.n, -1);
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t j = 0; j < K; ++j) {
                if (i == j) continue;
                std::uint64_t m = basis[i].bits ^ basis[j].bits;
                if (seen[m] < 0) {
                    seen[m] = static_cast<int>(diff_masks.size());
                    diff_masks.push_back(m);
                    diff_witness.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
            }
        KlVerdict verdict;
        detail::for_each_cover(g.n, d, [&](VertexSet delta, VertexSet omega) {
            if (!verdict.accepted) return;
            PauliOperator e = PauliOperator::hermitian(omega, delta);
            Pushthrough pt = pauli_pushthrough(g, e);
            if (pt.omega_image.empty()) {
                // diagonal: entries sigma * (-1)^{|omega ∩ C_i|} must agree
                int p0 = parity_intersect(e.x, basis[0]);
                for (std::size_t i = 1; i < K; ++i) {
                    if (parity_intersect(e.x, basis[i]) != p0) {
                        verdict.accepted = false;
                        verdict.violation = KlViolation{KlViolation::Kind::diagonal_mismatch,
                                                        e, static_cast<int>(i), static_cast<int>(i)};
                        return;
                    }
                }
            } else {
                int idx = seen[pt.omega_image.bits];
                if (idx >= 0) {
                    auto [i, j] = diff_witness[static_cast<std::size_t>(idx)];
                    verdict.accepted = false;
                    verdict.violation = KlViolation{KlViolation::Kind::off_diagonal, e, i, j};
                }
            }
        });
        return verdict;
    }
    throw std::invalid_argument("kl_verify: n too large for exact verification");
}

// Pure iff no Pauli of weight 1..d-1 acts as a (nonzero) constant on the
// code. Such an operator is necessarily proportional to some G_S with
// |S ∪ N_S| < d, so purity reduces to the d-purity set being empty.
inline bool is_pure(const Graph& g, const std::vector<VertexSet>& /*basis*/, int d) {
    if (g.n > 20) throw std::invalid_argument("is_pure: n too large");
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.n); ++m) {
        VertexSet s(g.n, m);
        if ((s | neighborhood_set(g, s)).count() < d) return false;
    }
    return true;
}

// Largest d accepted by kl_verify; for K = 1 (a stabilizer state) the
// convention is the minimum weight of a nontrivial vertex-stabilizer
// product, matching the self-dual code literature.
inline int code_distance(const Graph& g, const std::vector<VertexSet>& basis) {
    if (basis.size() <= 1) {
        int best = g.n + 1;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.n); ++m) {
            VertexSet s(g.n, m);
            int w = (s | neighborhood_set(g, s)).count();
            if (w < best) best = w;
        }
        return best;
    }
    int d = 1;
    while (d <= g.n && kl_verify(g, basis, d + 1).accepted) ++d;
    return d;
}

} // namespace qgraph
