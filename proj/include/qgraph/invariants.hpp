#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgraph/gf2_matrix.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/rational.hpp"
#include "qgraph/vertex_set.hpp"

namespace qgraph {

// Weight distribution A_0..A_n plus, per weight d, the ordered frequency
// series. Together these form the local-unitary + permutation invariant
// fingerprint used to separate inequivalent codes.
struct CodeInvariants {
    int n = 0;
    std::size_t K = 0;
    std::vector<Rational> A;                                  // indexed by weight 0..n
    std::vector<std::vector<std::vector<Rational>>> freq;     // freq[d][|S|] sorted ascending

    bool operator==(const CodeInvariants& o) const {
        return n == o.n && K == o.K && A == o.A && freq == o.freq;
    }

    std::string str() const {
        std::string out = "A:";
        for (const Rational& a : A) out += a.str() + ",";
        for (std::size_t d = 0; d < freq.size(); ++d) {
            out += ";F" + std::to_string(d + 1) + ":";
            for (const auto& series : freq[d]) {
                out += "[";
                for (const Rational& f : series) out += f.str() + ",";
                out += "]";
            }
        }
        return out;
    }
};

namespace detail {

// A_omega for every support omega with a nonzero entry, keyed by the support
// mask. Uses Tr(E P) = 0 unless E ∝ G_x for some x, in which case
// |Tr(E P)|^2 = (sum_C (-1)^{|x ∩ C|})^2; phases drop out of the magnitude.
inline std::map<std::uint64_t, Rational> a_omega_map(const Graph& g,
                                                     const std::vector<VertexSet>& basis) {
    if (g.n > 16) throw std::invalid_argument("weight_distribution: n too large");
    const std::int64_t K = static_cast<std::int64_t>(basis.size());
    std::map<std::uint64_t, Rational> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.n); ++x) {
        std::int64_t char_sum = 0;
        for (const VertexSet& c : basis)
            char_sum += (std::popcount(x & c.bits) & 1) ? -1 : 1;
        if (char_sum == 0) continue;
        VertexSet xs(g.n, x);
        std::uint64_t support = (xs | neighborhood_set(g, xs)).bits;
        out[support] += Rational(char_sum * char_sum, K * K);
    }
    return out;
}

} // namespace detail

// Exact weight distribution (A_0 .. A_n); satisfies sum_d A_d = 2^n / K.
inline std::vector<Rational> weight_distribution(const Graph& g,
                                                 const std::vector<VertexSet>& basis) {
    std::vector<Rational> A(static_cast<std::size_t>(g.n) + 1, Rational(0));
    for (const auto& [support, value] : detail::a_omega_map(g, basis))
        A[static_cast<std::size_t>(std::popcount(support))] += value;
    return A;
}

// Alternative route for coding groups: A_d equals the number of stabilizer
// elements G_S of weight d, with S running over the even-overlap solution
// space of the members. Cross-checked against the trace route in tests.
inline std::vector<Rational> weight_distribution_group(const Graph& g,
                                                       const std::vector<VertexSet>& members) {
    std::vector<VertexSet> dual = solve_even_overlap(members, g.n);
    std::vector<Rational> A(static_cast<std::size_t>(g.n) + 1, Rational(0));
    const std::size_t dim = dual.size();
    if (dim > 24) throw std::invalid_argument("weight_distribution_group: dual space too large");
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << dim); ++sel) {
        VertexSet s = VertexSet::empty_set(g.n);
        for (std::size_t i = 0; i < dim; ++i)
            if ((sel >> i) & 1) s ^= dual[i];
        int w = (s | neighborhood_set(g, s)).count();
        A[static_cast<std::size_t>(w)] += Rational(1);
    }
    return A;
}

// For each subset cardinality, the sorted list of F_d(S) = sum of A_omega
// over supports omega of weight d containing S. Cardinalities above d are
// omitted (all their frequencies vanish).
inline std::vector<std::vector<Rational>> frequency_series(const Graph& g,
                                                           const std::vector<VertexSet>& basis,
                                                           int d) {
    if (d < 0 || d > g.n) throw std::invalid_argument("frequency_series: bad weight");
    auto aom = detail::a_omega_map(g, basis);
    std::map<std::uint64_t, Rational> f;
    for (const auto& [support, value] : aom) {
        if (std::popcount(support) != d) continue;
        std::uint64_t sub = support;
        for (;;) {
            f[sub] += value;
            if (sub == 0) break;
            sub = (sub - 1) & support;
        }
    }
    std::vector<std::vector<Rational>> by_card(static_cast<std::size_t>(d) + 1);
    for (const auto& [s, value] : f)
        by_card[static_cast<std::size_t>(std::popcount(s))].push_back(value);
    auto choose = [&](int k) {
        std::uint64_t r = 1;
        for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(g.n - i) / static_cast<std::uint64_t>(i + 1);
        return r;
    };
    for (int card = 0; card <= d; ++card) {
        auto& series = by_card[static_cast<std::size_t>(card)];
        std::size_t total = static_cast<std::size_t>(choose(card));
        while (series.size() < total) series.push_back(Rational(0));
        std::sort(series.begin(), series.end());
    }
    return by_card;
}

// The full LU + permutation invariant fingerprint.
inline CodeInvariants code_invariants(const Graph& g, const std::vector<VertexSet>& basis) {
    CodeInvariants inv;
    inv.n = g.n;
    inv.K = basis.size();
    inv.A = weight_distribution(g, basis);
    inv.freq.resize(static_cast<std::size_t>(g.n));
    for (int d = 1; d <= g.n; ++d)
        inv.freq[static_cast<std::size_t>(d - 1)] = frequency_series(g, basis, d);
    return inv;
}

} // namespace qgraph
