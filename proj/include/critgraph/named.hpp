#pragma once

// Constructions for the named graphs used throughout. Vertex numbering is
// fixed so decompositions are reproducible: whenever a graph is built
// around a 5-cycle, the ring is vertices 0..4 in cycle order and the
// remaining vertices are appended in the order listed here.

#include <cctype>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

namespace detail {

// Ring 0..4 plus one extra vertex per adjacency list, in order.
inline Graph ring_plus(const std::vector<VertexSet>& extras) {
    Graph g(5 + static_cast<int>(extras.size()));
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    int w = 5;
    for (VertexSet nb : extras) {
        for (int v : VertexRange(nb)) g.add_edge(w, v);
        ++w;
    }
    return g;
}

constexpr VertexSet vs(std::initializer_list<int> l) {
    VertexSet s = 0;
    for (int v : l) s |= vbit(v);
    return s;
}

}  // namespace detail

// Triangle {1,2,4} with horns 0-1 and 2-3.
inline Graph bull_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 4);
    return g;
}

// 4-cycle 0-1-2-3 with a pendant at 0.
inline Graph banner_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    return g;
}

// Claw at 0 with one subdivided leg.
inline Graph chair_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    return g;
}

using detail::ring_plus;
using detail::vs;

// Ring plus a vertex seeing only ring vertex 0 and a vertex seeing the
// other four ring vertices, with the two extras adjacent.
inline Graph d_graph() {
    Graph g = ring_plus({vs({0}), vs({1, 2, 3, 4})});
    g.add_edge(5, 6);
    return g;
}

// Ring plus two nonadjacent vertices each seeing ring vertices 1..4.
inline Graph e_graph() { return ring_plus({vs({1, 2, 3, 4}), vs({1, 2, 3, 4})}); }

// Ring plus a two-ring-neighbour vertex and a four-ring-neighbour vertex,
// made adjacent; the five variants differ in the relative position.
inline Graph h_graph(int i) {
    static const VertexSet low[5] = {vs({1, 4}), vs({0, 2}), vs({1, 3}), vs({2, 4}), vs({0, 3})};
    if (i < 1 || i > 5) throw std::invalid_argument("h_graph: index 1..5");
    Graph g = ring_plus({low[i - 1], vs({1, 2, 3, 4})});
    g.add_edge(5, 6);
    return g;
}

// 5-wheel: ring plus a hub adjacent to the whole ring.
inline Graph wheel5_graph() { return ring_plus({vs({0, 1, 2, 3, 4})}); }

// 5-wheel plus a pendant at the hub.
inline Graph f1_graph() {
    Graph g = ring_plus({vs({0, 1, 2, 3, 4})});
    g = add_vertex(g, vs({5}));
    return g;
}

inline Graph f2_graph() { return wheel5_graph(); }

inline Graph f3_graph() { return ring_plus({vs({1, 4}), vs({0, 1, 4, 5})}); }

inline Graph f4_graph() { return ring_plus({vs({1, 4}), vs({0, 5})}); }

inline Graph f5_graph() { return ring_plus({vs({0}), vs({0})}); }

inline Graph f6_graph() { return ring_plus({vs({1, 4})}); }

inline Graph co_c7_graph() { return complement(cycle_graph(7)); }

inline Graph co_c9_graph() { return complement(cycle_graph(9)); }

inline Graph c5_join_k2_graph() { return join(cycle_graph(5), complete_graph(2)); }

// Looks up a graph by name: p<n>, c<n>, k<n>, bull, banner, chair,
// co_c7, co_c9, c5_join_k2, w5, d, e, h1..h5, f1..f6. Case-insensitive.
inline Graph build_named(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto num = [&](size_t from) -> int {
        if (from >= s.size()) throw std::invalid_argument("build_named: missing parameter in '" + name + "'");
        int n = 0;
        for (size_t i = from; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("build_named: bad parameter in '" + name + "'");
            n = n * 10 + (s[i] - '0');
            if (n > kMaxOrder) throw std::invalid_argument("build_named: order beyond 64 in '" + name + "'");
        }
        if (n < 1) throw std::invalid_argument("build_named: parameter must be >= 1 in '" + name + "'");
        return n;
    };
    if (s == "bull") return bull_graph();
    if (s == "banner") return banner_graph();
    if (s == "chair") return chair_graph();
    if (s == "co_c7" || s == "c7bar") return co_c7_graph();
    if (s == "co_c9" || s == "c9bar") return co_c9_graph();
    if (s == "c5_join_k2") return c5_join_k2_graph();
    if (s == "w5") return wheel5_graph();
    if (s == "d") return d_graph();
    if (s == "e") return e_graph();
    if (s.size() == 2 && s[0] == 'h' && s[1] >= '1' && s[1] <= '5') return h_graph(s[1] - '0');
    if (s.size() == 2 && s[0] == 'f' && s[1] >= '1' && s[1] <= '6') {
        switch (s[1]) {
            case '1': return f1_graph();
            case '2': return f2_graph();
            case '3': return f3_graph();
            case '4': return f4_graph();
            case '5': return f5_graph();
            default: return f6_graph();
        }
    }
    if (s.size() >= 2 && s[0] == 'p') return path_graph(num(1));
    if (s.size() >= 2 && s[0] == 'c') {
        const int n = num(1);
        if (n < 3) throw std::invalid_argument("build_named: cycle needs n >= 3");
        return cycle_graph(n);
    }
    if (s.size() >= 2 && s[0] == 'k') return complete_graph(num(1));
    throw std::invalid_argument("build_named: unknown graph name '" + name + "'");
}

inline const std::vector<std::string>& named_graph_names() {
    static const std::vector<std::string> names = {
        "p<n>", "c<n>", "k<n>", "bull", "banner", "chair", "co_c7", "co_c9",
        "c5_join_k2", "w5", "d", "e", "h1", "h2", "h3", "h4", "h5",
        "f1", "f2", "f3", "f4", "f5", "f6"};
    return names;
}

}  // namespace critgraph
