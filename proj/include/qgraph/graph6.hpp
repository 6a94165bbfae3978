#pragma once

#include <string>

#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

// graph6 ASCII encoding (the standard one: 6-bit groups offset by 63, upper
// triangle column-major). We only ever need n <= 64, which covers the
// one-byte and the "~"-prefixed four-byte size headers.

inline std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw parse_error("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: invalid character");
        return c - 63;
    };
    int n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        // 126-prefixed size; a second 126 (n >= 2^18) is out of range here.
        int a = next();
        if (a == 63) throw parse_error("graph6: vertex count too large");
        n = (a << 12) | (next() << 6) | next();
    }
    if (n > VertexSet::max_vertices)
        throw parse_error("graph6: vertex count exceeds 64");
    Graph g(n);
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (pos != text.size()) throw parse_error("graph6: trailing characters");
    return g;
}

} // namespace qgraph
