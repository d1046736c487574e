#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgraph {

// A vertex set over {0,...,63} as one machine word.
using VertexSet = std::uint64_t;

constexpr int kMaxOrder = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex of a nonempty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

// for (int v : VertexRange(s)) iterates a set in ascending order.
class VertexRange {
public:
    explicit VertexRange(VertexSet s) : s_(s) {}
    class iterator {
    public:
        explicit iterator(VertexSet s) : s_(s) {}
        int operator*() const { return std::countr_zero(s_); }
        iterator& operator++() {
            s_ &= s_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return s_ != o.s_; }

    private:
        VertexSet s_;
    };
    iterator begin() const { return iterator(s_); }
    iterator end() const { return iterator(0); }

private:
    VertexSet s_;
};

// Simple graph on at most 64 vertices, stored as one neighbourhood
// bitmask per vertex. Values are cheap to copy and treated as immutable
// once built; all operations below are pure.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxOrder) throw std::invalid_argument("Graph: order out of range");
    }

    int order() const { return n_; }

    VertexSet vertices() const { return full_set(n_); }

    bool edge(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }

    VertexSet neighbours(int v) const { return adj_[v]; }

    int degree(int v) const { return std::popcount(adj_[v]); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
};

inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.edge(u, v)) h.add_edge(u, v);
    return h;
}

// Subgraph induced by s; vertices are relabelled 0..|s|-1 in ascending
// original order.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if ((s & ~g.vertices()) != 0) throw std::invalid_argument("induced_subgraph: set out of range");
    std::array<int, kMaxOrder> newid{};
    int m = 0;
    for (int v : VertexRange(s)) newid[v] = m++;
    Graph h(m);
    for (int u : VertexRange(s)) {
        for (int v : VertexRange(g.neighbours(u) & s))
            if (u < v) h.add_edge(newid[u], newid[v]);
    }
    return h;
}

inline Graph delete_vertex(const Graph& g, int v) {
    return induced_subgraph(g, g.vertices() & ~vbit(v));
}

// Connected pieces of g[within], sorted by smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    if ((within & ~g.vertices()) != 0) throw std::invalid_argument("components: set out of range");
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (left) {
        VertexSet comp = vbit(first_vertex(left));
        for (;;) {
            VertexSet grow = comp;
            for (int v : VertexRange(comp)) grow |= g.neighbours(v) & within;
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

// Disjoint union with g2's vertices appended after g1's.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxOrder) throw std::invalid_argument("disjoint_union: order overflow");
    Graph h(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v : VertexRange(g1.neighbours(u)))
            if (u < v) h.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v : VertexRange(g2.neighbours(u)))
            if (u < v) h.add_edge(n1 + u, n1 + v);
    return h;
}

// Disjoint union plus all cross edges.
inline Graph join(const Graph& g1, const Graph& g2) {
    Graph h = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) h.add_edge(u, g1.order() + v);
    return h;
}

// New vertex (index n) with the given neighbourhood.
inline Graph add_vertex(const Graph& g, VertexSet nbrs) {
    const int n = g.order();
    if (n + 1 > kMaxOrder) throw std::invalid_argument("add_vertex: order overflow");
    if ((nbrs & ~g.vertices()) != 0) throw std::invalid_argument("add_vertex: neighbourhood out of range");
    Graph h(n + 1);
    for (int u = 0; u < n; ++u)
        for (int v : VertexRange(g.neighbours(u)))
            if (u < v) h.add_edge(u, v);
    for (int v : VertexRange(nbrs)) h.add_edge(n, v);
    return h;
}

// Relabelled copy: vertex v of g becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permuted: size mismatch");
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v : VertexRange(g.neighbours(u)))
            if (u < v) h.add_edge(perm[u], perm[v]);
    return h;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// a and b must be disjoint.
inline bool complete_between(const Graph& g, VertexSet a, VertexSet b) {
    for (int v : VertexRange(a))
        if ((g.neighbours(v) & b) != b) return false;
    return true;
}

inline bool anticomplete_between(const Graph& g, VertexSet a, VertexSet b) {
    for (int v : VertexRange(a))
        if ((g.neighbours(v) & b) != 0) return false;
    return true;
}

inline bool pure_between(const Graph& g, VertexSet a, VertexSet b) {
    return complete_between(g, a, b) || anticomplete_between(g, a, b);
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (int v : VertexRange(s))
        if ((g.neighbours(v) & s) != (s & ~vbit(v))) return false;
    return true;
}

inline bool is_stable_set(const Graph& g, VertexSet s) {
    for (int v : VertexRange(s))
        if ((g.neighbours(v) & s) != 0) return false;
    return true;
}

// Neighbourhood of a set: outside vertices with a neighbour in s.
inline VertexSet set_neighbourhood(const Graph& g, VertexSet s) {
    VertexSet nb = 0;
    for (int v : VertexRange(s)) nb |= g.neighbours(v);
    return nb & ~s;
}

}  // namespace critgraph
