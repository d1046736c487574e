#pragma once

// Standard graph6 interchange format: one graph per line, byte N(n)
// followed by the upper triangle of the adjacency matrix in column order,
// six bits per printable byte (offset 63). Orders 63 and 64 use the
// extended '~' + 3 byte header.

#include <string>

#include "critgraph/graph.hpp"

namespace critgraph {

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph decode_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated");
        const unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
        return c - 63;
    };
    if (s.empty()) throw std::invalid_argument("graph6: empty");
    int n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw std::invalid_argument("graph6: order beyond 64 unsupported");
        const int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > kMaxOrder) throw std::invalid_argument("graph6: order beyond 64 unsupported");
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding");
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

}  // namespace critgraph
