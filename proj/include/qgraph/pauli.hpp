#pragma once

#include <cctype>
#include <string>

#include "qgraph/errors.hpp"
#include "qgraph/vertex_set.hpp"

namespace qgraph {

// n-qubit Pauli operator in the canonical form
//
//     P  =  i^phase_exp * X_x * Z_z
//
// with all X factors to the left of all Z factors. A qubit in x∩z carries
// X*Z = -iY. P is Hermitian iff phase_exp ≡ |x∩z| (mod 2); the canonical
// Hermitian representative uses phase_exp = |x∩z| mod 4 (one i per Y site).
struct PauliOperator {
    VertexSet x;
    VertexSet z;
    int phase_exp = 0; // exponent of i, mod 4

    PauliOperator() = default;
    PauliOperator(VertexSet x_support, VertexSet z_support, int phase_exponent = 0)
        : x(x_support), z(z_support), phase_exp(((phase_exponent % 4) + 4) % 4) {
        if (x.n != z.n) throw std::invalid_argument("PauliOperator: dimension mismatch");
    }

    static PauliOperator identity(int n) {
        return PauliOperator(VertexSet::empty_set(n), VertexSet::empty_set(n), 0);
    }

    // The Hermitian operator with the given letter pattern (X on x\z, Z on
    // z\x, Y on x∩z) and a +1 overall sign in front of the Y-expansion.
    static PauliOperator hermitian(VertexSet x_support, VertexSet z_support) {
        int ys = (x_support & z_support).count();
        return PauliOperator(x_support, z_support, ys & 3);
    }

    int n() const { return x.n; }
    VertexSet support() const { return x | z; }
    int weight() const { return support().count(); }

    bool is_hermitian() const { return ((phase_exp - (x & z).count()) & 1) == 0; }

    bool operator==(const PauliOperator& o) const {
        return x == o.x && z == o.z && phase_exp == o.phase_exp;
    }
    bool operator!=(const PauliOperator& o) const { return !(*this == o); }

    // Product in canonical form. Moving Z_z1 past X_x2 costs (-1)^{|z1∩x2|}.
    friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
        int sign = parity_intersect(a.z, b.x);
        return PauliOperator(a.x ^ b.x, a.z ^ b.z, a.phase_exp + b.phase_exp + 2 * sign);
    }

    PauliOperator adjoint() const {
        // (i^e X Z)† = (-i)^e Z X = (-i)^e (-1)^{|x∩z|} X Z
        int e = (-phase_exp + 2 * (x & z).count()) & 3;
        PauliOperator out = *this;
        out.phase_exp = ((e % 4) + 4) % 4;
        return out;
    }

    bool commutes_with(const PauliOperator& o) const {
        return ((parity_intersect(x, o.z) + parity_intersect(z, o.x)) & 1) == 0;
    }

    // Text form: optional phase prefix ("", "i", "-", "-i") then one letter
    // per qubit from {I,X,Y,Z}, qubit 0 first.
    std::string str() const {
        static const char* prefix[4] = {"", "i", "-", "-i"};
        int ys = (x & z).count();
        std::string out = prefix[((phase_exp - ys) % 4 + 4) % 4];
        for (int q = 0; q < n(); ++q) {
            bool xs = x.contains(q), zs = z.contains(q);
            out.push_back(xs ? (zs ? 'Y' : 'X') : (zs ? 'Z' : 'I'));
        }
        return out;
    }

    static PauliOperator parse(const std::string& text, int n_expected = -1) {
        std::size_t pos = 0;
        int e = 0;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') e = 2;
            ++pos;
        }
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
            // 'i' here is a phase only if followed by a Pauli letter run that
            // would otherwise start with lowercase i; we accept 'i' (lowercase)
            // as phase, uppercase 'I' always as identity letter.
            if (text[pos] == 'i') { e += 1; ++pos; }
        }
        std::string letters = text.substr(pos);
        int n = static_cast<int>(letters.size());
        if (n == 0) throw parse_error("Pauli: empty operator");
        if (n_expected >= 0 && n != n_expected)
            throw parse_error("Pauli: expected " + std::to_string(n_expected) + " letters");
        VertexSet xs = VertexSet::empty_set(n), zs = VertexSet::empty_set(n);
        for (int q = 0; q < n; ++q) {
            switch (std::toupper(static_cast<unsigned char>(letters[static_cast<std::size_t>(q)]))) {
                case 'I': break;
                case 'X': xs.add(q); break;
                case 'Z': zs.add(q); break;
                case 'Y': xs.add(q); zs.add(q); e += 1; break;
                default: throw parse_error("Pauli: invalid letter");
            }
        }
        return PauliOperator(xs, zs, e);
    }
};

} // namespace qgraph
