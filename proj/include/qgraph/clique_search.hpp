#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qgraph/code_search.hpp"
#include "qgraph/runtime.hpp"

namespace qgraph {

// Dynamic bitset sized for super-graph vertex counts (a few thousand max).
struct DynBitset {
    std::vector<std::uint64_t> w;

    explicit DynBitset(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(std::size_t i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    bool any() const {
        for (std::uint64_t v : w) if (v) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t v : w) total += static_cast<std::size_t>(std::popcount(v));
        return total;
    }
    void and_with(const std::vector<std::uint64_t>& other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
    }
    void and_not(const std::vector<std::uint64_t>& other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~other[i];
    }
    // drop all bits <= i
    void restrict_above(std::size_t i) {
        std::size_t wi = i >> 6;
        for (std::size_t k = 0; k < wi && k < w.size(); ++k) w[k] = 0;
        if (wi < w.size()) {
            std::uint64_t low = (i & 63) == 63 ? ~0ull : ((2ull << (i & 63)) - 1);
            w[wi] &= ~low;
        }
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w.size(); ++wi)
            for (std::uint64_t v = w[wi]; v; v &= v - 1)
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(v)));
    }
    int lowest() const {
        for (std::size_t wi = 0; wi < w.size(); ++wi)
            if (w[wi]) return static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w[wi])));
        return -1;
    }
};

enum class CliqueMode { max, all_max, at_least, exhaustive };

struct CliqueSearchResult {
    std::vector<std::vector<std::size_t>> cliques; // vertex indices, each sorted
    std::size_t max_size = 0;
    bool complete = true;        // false when the time budget expired
    std::uint64_t nodes = 0;     // expanded search-tree nodes
};

namespace detail {

class CliqueEngine {
public:
    CliqueEngine(const std::vector<std::vector<std::uint64_t>>& adj, std::size_t order,
                 Deadline deadline)
        : adj_(adj), order_(order), deadline_(deadline) {}

    // Greedy coloring of the candidate set in fixed vertex order: each class
    // is independent, so the class count bounds any clique inside `cand`.
    // Output is sorted by color ascending; Tomita-style expansion walks it
    // from the back.
    void color_sort(const DynBitset& cand, std::vector<std::size_t>& verts,
                    std::vector<std::size_t>& colors) const {
        verts.clear();
        colors.clear();
        DynBitset rest = cand;
        std::size_t color = 0;
        while (rest.any()) {
            ++color;
            DynBitset cls = rest;
            while (true) {
                int v = cls.lowest();
                if (v < 0) break;
                std::size_t sv = static_cast<std::size_t>(v);
                verts.push_back(sv);
                colors.push_back(color);
                rest.clear(sv);
                cls.clear(sv);
                cls.and_not(adj_[sv]);
            }
        }
    }

    void find_maximum(std::vector<std::size_t> root, DynBitset cand, CliqueSearchResult& res) {
        if (root.size() > res.max_size) {
            res.max_size = root.size();
            res.cliques.assign(1, root);
        }
        expand_max(root, cand, res);
    }

    // Every clique of size exactly K extending `root`, candidates drawn in
    // ascending vertex order (each clique appears once).
    void enumerate_exact(std::vector<std::size_t> root, DynBitset cand, std::size_t K,
                         CliqueSearchResult& res) {
        expand_exact(root, cand, K, res);
    }

    // Maximal cliques of size >= K (Bron-Kerbosch with pivoting).
    void enumerate_maximal(std::vector<std::size_t> root, DynBitset p, DynBitset x, std::size_t K,
                           CliqueSearchResult& res) {
        bron_kerbosch(root, p, x, K, res);
    }

private:
    bool tick(CliqueSearchResult& res) {
        if (++res.nodes % 4096 == 0 && deadline_.expired()) res.complete = false;
        return res.complete;
    }

    void expand_max(std::vector<std::size_t>& r, DynBitset& cand, CliqueSearchResult& res) {
        if (!tick(res)) return;
        std::vector<std::size_t> verts, colors;
        color_sort(cand, verts, colors);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (r.size() + colors[idx] <= res.max_size) return;
            std::size_t v = verts[idx];
            r.push_back(v);
            DynBitset next = cand;
            next.and_with(adj_[v]);
            if (r.size() > res.max_size) {
                res.max_size = r.size();
                std::vector<std::size_t> found = r;
                std::sort(found.begin(), found.end());
                res.cliques.assign(1, std::move(found));
            }
            if (next.any()) expand_max(r, next, res);
            r.pop_back();
            cand.clear(v);
            if (!res.complete) return;
        }
    }

    void expand_exact(std::vector<std::size_t>& r, const DynBitset& cand, std::size_t K,
                      CliqueSearchResult& res) {
        if (!tick(res)) return;
        if (r.size() == K) {
            std::vector<std::size_t> found = r;
            std::sort(found.begin(), found.end());
            res.cliques.push_back(std::move(found));
            res.max_size = std::max(res.max_size, K);
            return;
        }
        std::vector<std::size_t> verts, colors;
        color_sort(cand, verts, colors);
        std::size_t bound = colors.empty() ? 0 : colors.back();
        if (r.size() + bound < K) return;
        std::vector<std::size_t> order;
        cand.for_each([&](std::size_t v) { order.push_back(v); });
        for (std::size_t v : order) {
            DynBitset next = cand;
            next.and_with(adj_[v]);
            next.restrict_above(v);
            if (r.size() + 1 + next.count() < K) continue;
            r.push_back(v);
            expand_exact(r, next, K, res);
            r.pop_back();
            if (!res.complete) return;
        }
    }

    void bron_kerbosch(std::vector<std::size_t>& r, DynBitset& p, DynBitset& x, std::size_t K,
                       CliqueSearchResult& res) {
        if (!tick(res)) return;
        if (!p.any() && !x.any()) {
            if (r.size() >= K) {
                std::vector<std::size_t> found = r;
                std::sort(found.begin(), found.end());
                res.cliques.push_back(std::move(found));
                res.max_size = std::max(res.max_size, r.size());
            }
            return;
        }
        if (r.size() + p.count() < K) return;
        int pivot = p.lowest();
        if (pivot < 0) pivot = x.lowest();
        DynBitset cand = p;
        cand.and_not(adj_[static_cast<std::size_t>(pivot)]);
        std::vector<std::size_t> order;
        cand.for_each([&](std::size_t v) { order.push_back(v); });
        for (std::size_t v : order) {
            DynBitset p2 = p, x2 = x;
            p2.and_with(adj_[v]);
            x2.and_with(adj_[v]);
            r.push_back(v);
            bron_kerbosch(r, p2, x2, K, res);
            r.pop_back();
            p.clear(v);
            x.set(v);
            if (!res.complete) return;
        }
    }

    const std::vector<std::vector<std::uint64_t>>& adj_;
    std::size_t order_;
    Deadline deadline_;
};

} // namespace detail

// Clique search over a super graph. The empty set (vertex 0) is adjacent to
// every other vertex, so all searches are rooted at it: every maximum or
// maximal clique contains it, and any K-clique avoiding it is the shift of
// one that does not. Output order is canonical: members ascending, cliques
// lexicographic.
inline std::vector<CodingClique> find_cliques(const SuperGraph& sg, CliqueMode mode,
                                              std::size_t K = 0,
                                              Deadline deadline = Deadline::from_env(),
                                              CliqueSearchResult* stats = nullptr) {
    CliqueSearchResult res;
    const std::size_t order = sg.order();
    if (order > 0) {
        detail::CliqueEngine engine(sg.adj, order, deadline);
        std::vector<std::size_t> root{0};
        DynBitset others(order);
        for (std::size_t i = 1; i < order; ++i) others.set(i);
        switch (mode) {
            case CliqueMode::max:
                engine.find_maximum(root, others, res);
                break;
            case CliqueMode::all_max: {
                engine.find_maximum(root, others, res);
                if (res.complete) {
                    std::size_t best = res.max_size;
                    res.cliques.clear();
                    engine.enumerate_exact(root, others, best, res);
                }
                break;
            }
            case CliqueMode::at_least: {
                DynBitset x(order);
                engine.enumerate_maximal(root, others, x, K, res);
                break;
            }
            case CliqueMode::exhaustive:
                if (K >= 1) engine.enumerate_exact(root, others, K, res);
                break;
        }
    }

    std::vector<CodingClique> out;
    for (const auto& idxs : res.cliques) {
        CodingClique cc;
        cc.graph = sg.base;
        cc.d = sg.d;
        for (std::size_t i : idxs) cc.members.push_back(sg.vertices[i]);
        std::sort(cc.members.begin(), cc.members.end());
        cc.is_group = closed_under_sym_diff(cc.members);
        if (cc.is_group) cc.generators = group_generators(cc.members);
        out.push_back(std::move(cc));
    }
    std::sort(out.begin(), out.end(),
              [](const CodingClique& a, const CodingClique& b) { return a.members < b.members; });
    if (stats) *stats = res;
    return out;
}

} // namespace qgraph
