#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qgraph {

// A subset of the n vertices of a graph, one bit per vertex. This is the
// universal currency of the whole formalism: basis labels C, purity sets S,
// error supports omega/delta, neighborhoods N_S. Vertices are 0-indexed
// internally; 1-indexed labels appear only at the I/O boundary.
struct VertexSet {
    static constexpr int max_vertices = 64;

    std::uint64_t bits = 0;
    int n = 0;

    VertexSet() = default;
    VertexSet(int n_vertices, std::uint64_t mask) : bits(mask), n(n_vertices) {
        check_size(n_vertices);
        if (n < 64 && (mask >> n) != 0)
            throw std::invalid_argument("VertexSet: bits above vertex count");
    }

    static VertexSet empty_set(int n_vertices) { return VertexSet(n_vertices, 0); }

    static VertexSet full_set(int n_vertices) {
        check_size(n_vertices);
        return VertexSet(n_vertices, n_vertices == 64 ? ~0ull : (1ull << n_vertices) - 1);
    }

    static VertexSet single(int n_vertices, int v) {
        VertexSet s = empty_set(n_vertices);
        s.add(v);
        return s;
    }

    static VertexSet of(int n_vertices, std::initializer_list<int> vs) {
        VertexSet s = empty_set(n_vertices);
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return v >= 0 && v < n && ((bits >> v) & 1u); }
    void add(int v) {
        if (v < 0 || v >= n) throw std::out_of_range("VertexSet: vertex out of range");
        bits |= 1ull << v;
    }
    void remove(int v) {
        if (v < 0 || v >= n) throw std::out_of_range("VertexSet: vertex out of range");
        bits &= ~(1ull << v);
    }

    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    VertexSet operator^(const VertexSet& o) const { return VertexSet(same_n(o), bits ^ o.bits); }
    VertexSet operator&(const VertexSet& o) const { return VertexSet(same_n(o), bits & o.bits); }
    VertexSet operator|(const VertexSet& o) const { return VertexSet(same_n(o), bits | o.bits); }
    VertexSet& operator^=(const VertexSet& o) { same_n(o); bits ^= o.bits; return *this; }
    VertexSet& operator&=(const VertexSet& o) { same_n(o); bits &= o.bits; return *this; }
    VertexSet& operator|=(const VertexSet& o) { same_n(o); bits |= o.bits; return *this; }

    VertexSet complement() const { return VertexSet(n, bits ^ full_set(n).bits); }

    bool subset_of(const VertexSet& o) const { same_n(o); return (bits & ~o.bits) == 0; }
    bool intersects(const VertexSet& o) const { same_n(o); return (bits & o.bits) != 0; }

    bool operator==(const VertexSet& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const { return bits != o.bits ? bits < o.bits : n < o.n; }

    // Ascending vertex list, handy for I/O and deterministic iteration.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t m = bits; m; m &= m - 1) f(std::countr_zero(m));
    }

private:
    static void check_size(int n_vertices) {
        if (n_vertices < 0 || n_vertices > max_vertices)
            throw std::invalid_argument("VertexSet: vertex count must be in [0,64]");
    }
    int same_n(const VertexSet& o) const {
        if (n != o.n) throw std::invalid_argument("VertexSet: dimension mismatch");
        return n;
    }
};

inline VertexSet sym_diff(const VertexSet& a, const VertexSet& b) { return a ^ b; }

// |a ∩ b| mod 2. The parity check behind Condition 1.
inline int parity_intersect(const VertexSet& a, const VertexSet& b) {
    return std::popcount((a & b).bits) & 1;
}

} // namespace qgraph

template <>
struct std::hash<qgraph::VertexSet> {
    std::size_t operator()(const qgraph::VertexSet& s) const noexcept {
        return std::hash<std::uint64_t>()(s.bits * 0x9e3779b97f4a7c15ull + static_cast<unsigned>(s.n));
    }
};
