#pragma once

// Homogeneous sets and substitution, the homogeneous-C5 <-> K3 exchange,
// and the neighbourhood decomposition around an induced 5-cycle.

#include <array>
#include <optional>
#include <vector>

#include "critgraph/detect.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/named.hpp"

namespace critgraph {

// Every outside vertex is complete or anti-complete to s.
inline bool is_homogeneous(const Graph& g, VertexSet s) {
    for (int v : VertexRange(g.vertices() & ~s)) {
        const VertexSet hit = g.neighbours(v) & s;
        if (hit != 0 && hit != s) return false;
    }
    return true;
}

inline bool is_nontrivial_homogeneous(const Graph& g, VertexSet s) {
    const int sz = set_size(s);
    return sz >= 2 && sz <= g.order() - 1 && is_homogeneous(g, s);
}

// All inclusion-maximal nontrivial homogeneous sets, brute force over
// vertex subsets with a cost guard. Complete and edgeless graphs are
// special-cased (every subset qualifies there).
inline std::vector<VertexSet> maximal_homogeneous_sets(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> maximal;
    if (n <= 2) return maximal;
    if (n > 22) throw std::invalid_argument("maximal_homogeneous_sets: order above guard (22)");
    const int m = g.edge_count();
    if (m == 0 || m == n * (n - 1) / 2) {
        for (int v = n - 1; v >= 0; --v) maximal.push_back(g.vertices() & ~vbit(v));
        return maximal;
    }
    std::vector<VertexSet> all;
    const VertexSet limit = full_set(n);
    for (VertexSet s = 3; s < limit; ++s) {
        if (set_size(s) < 2) continue;
        if (is_homogeneous(g, s)) all.push_back(s);
        if (all.size() > 2000000) throw std::runtime_error("maximal_homogeneous_sets: too many sets");
    }
    std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) { return set_size(a) > set_size(b); });
    for (VertexSet s : all) {
        bool dominated = false;
        for (VertexSet t : maximal)
            if ((s & ~t) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    return maximal;
}

inline std::vector<VertexSet> homogeneous_sets_inducing(const Graph& g, const Graph& shape) {
    std::vector<VertexSet> out;
    for (VertexSet s : maximal_homogeneous_sets(g))
        if (set_size(s) == shape.order() && are_isomorphic(induced_subgraph(g, s), shape)) out.push_back(s);
    return out;
}

// Replaces the homogeneous set s of g1 by g2: vertices of g1 - s keep
// their mutual adjacency (and come first, in ascending order), g2's
// vertices are appended with g2's adjacency, and a kept vertex is joined
// to all of g2 exactly when it was complete to s in g1.
inline Graph substitute(const Graph& g1, VertexSet s, const Graph& g2) {
    if (s == 0 || (s & ~g1.vertices()) != 0) throw std::invalid_argument("substitute: bad set");
    if (!is_homogeneous(g1, s)) throw std::invalid_argument("substitute: set not homogeneous");
    const int n1 = g1.order(), n2 = g2.order();
    const int keep = n1 - set_size(s);
    if (keep + n2 > kMaxOrder) throw std::invalid_argument("substitute: order overflow");
    std::array<int, kMaxOrder> newid{};
    int next = 0;
    for (int v : VertexRange(g1.vertices() & ~s)) newid[v] = next++;
    Graph h(keep + n2);
    for (int u : VertexRange(g1.vertices() & ~s))
        for (int v : VertexRange(g1.neighbours(u) & ~s))
            if (u < v) h.add_edge(newid[u], newid[v]);
    for (int u = 0; u < n2; ++u)
        for (int v : VertexRange(g2.neighbours(u)))
            if (u < v) h.add_edge(keep + u, keep + v);
    for (int u : VertexRange(g1.vertices() & ~s)) {
        if ((g1.neighbours(u) & s) == s)
            for (int v = 0; v < n2; ++v) h.add_edge(newid[u], keep + v);
    }
    return h;
}

// Deterministic pick: lexicographically least vertex tuple.
inline bool lex_set_less(VertexSet a, VertexSet b) {
    while (a && b) {
        const int va = first_vertex(a), vb = first_vertex(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

// One nontrivial homogeneous set inducing a C5, least first, found by
// scanning induced 5-cycles.
inline std::optional<VertexSet> find_homogeneous_c5(const Graph& g) {
    if (g.order() < 6) return std::nullopt;
    std::optional<VertexSet> best;
    for (const auto& ring : all_induced_c5(g)) {
        VertexSet s = 0;
        for (int v : ring) s |= vbit(v);
        if (!is_homogeneous(g, s)) continue;
        if (!best || lex_set_less(s, *best)) best = s;
    }
    return best;
}

struct ReduceStep {
    VertexSet replaced;  // the homogeneous C5, in the labels before the step
    VertexSet created;   // the K3 it became, in the labels after the step
};

struct ReduceResult {
    Graph graph;
    int steps = 0;
    std::vector<ReduceStep> log;
};

// Repeatedly replaces a homogeneous C5 by a K3 until none remains; order
// drops by 2 per step, so this runs at most |G|/2 times.
inline ReduceResult reduce_homogeneous_c5(const Graph& g) {
    ReduceResult r;
    r.graph = g;
    for (;;) {
        auto s = find_homogeneous_c5(r.graph);
        if (!s) return r;
        const Graph next = substitute(r.graph, *s, complete_graph(3));
        const int keep = r.graph.order() - 5;
        r.log.push_back({*s, full_set(keep + 3) & ~full_set(keep)});
        r.graph = next;
        ++r.steps;
    }
}

// Substitutes a C5 for a homogeneous K3; order grows by 2.
inline Graph expand_k3_to_c5(const Graph& g, VertexSet s) {
    if (set_size(s) != 3 || !is_clique(g, s)) throw std::invalid_argument("expand_k3_to_c5: set is not a K3");
    if (!is_homogeneous(g, s)) throw std::invalid_argument("expand_k3_to_c5: set not homogeneous");
    return substitute(g, s, cycle_graph(5));
}

// All homogeneous K3 occurrences (vertex sets), for the counting argument
// that bounds the expansion chain.
inline std::vector<VertexSet> homogeneous_k3_occurrences(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b : VertexRange(g.neighbours(a) & ~(vbit(a) | (vbit(a) - 1))))
            for (int c : VertexRange(g.neighbours(a) & g.neighbours(b) & ~(vbit(b) | (vbit(b) - 1)))) {
                const VertexSet s = vbit(a) | vbit(b) | vbit(c);
                if (set_size(s) <= n - 1 && is_homogeneous(g, s)) out.push_back(s);
            }
    return out;
}

// Classification of the vertices outside an induced 5-cycle by their exact
// neighbourhood pattern on the ring. Ring positions are 0..4 in cycle
// order, arithmetic mod 5:
//   s1[i]: sees ring[i] only          s2[i]: sees ring[i-1], ring[i+1]
//   s3[i]: sees ring[i-1..i+1]        s4[i]: sees all but ring[i]
//   s5: sees the whole ring           s0: sees none of it
// Patterns matching none of these land in `unclassified`.
struct C5Decomposition {
    std::array<int, 5> ring{};
    VertexSet ring_set = 0;
    VertexSet s0 = 0, s5 = 0, unclassified = 0;
    std::array<VertexSet, 5> s1{}, s2{}, s3{}, s4{};

    VertexSet s1_all() const { return s1[0] | s1[1] | s1[2] | s1[3] | s1[4]; }
    VertexSet s2_all() const { return s2[0] | s2[1] | s2[2] | s2[3] | s2[4]; }
    VertexSet s3_all() const { return s3[0] | s3[1] | s3[2] | s3[3] | s3[4]; }
    VertexSet s4_all() const { return s4[0] | s4[1] | s4[2] | s4[3] | s4[4]; }

    // side_a(i): ring[i] plus everything whose pattern on the other four
    // ring vertices equals ring[i]'s own; side_b(i): everything seeing
    // none of the other four.
    VertexSet side_a(int i) const { return vbit(ring[i]) | s2[i] | s3[i]; }
    VertexSet side_b(int i) const { return s1[i] | s0; }
};

inline C5Decomposition c5_partition(const Graph& g, const std::array<int, 5>& ring) {
    C5Decomposition d;
    d.ring = ring;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j)
            if (ring[i] == ring[j]) throw std::invalid_argument("c5_partition: repeated ring vertex");
        if (ring[i] < 0 || ring[i] >= g.order()) throw std::invalid_argument("c5_partition: ring vertex out of range");
        d.ring_set |= vbit(ring[i]);
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const bool want = (j - i == 1) || (j - i == 4);
            if (g.edge(ring[i], ring[j]) != want)
                throw std::invalid_argument("c5_partition: ring is not an induced C5 in cycle order");
        }

    std::array<VertexSet, 5> pat1{}, pat2{}, pat3{}, pat4{};
    for (int i = 0; i < 5; ++i) {
        const auto at = [&](int j) { return vbit(d.ring[((j % 5) + 5) % 5]); };
        pat1[i] = at(i);
        pat2[i] = at(i - 1) | at(i + 1);
        pat3[i] = at(i - 1) | at(i) | at(i + 1);
        pat4[i] = d.ring_set & ~at(i);
    }
    for (int v : VertexRange(g.vertices() & ~d.ring_set)) {
        const VertexSet nb = g.neighbours(v) & d.ring_set;
        if (nb == 0) {
            d.s0 |= vbit(v);
            continue;
        }
        if (nb == d.ring_set) {
            d.s5 |= vbit(v);
            continue;
        }
        bool placed = false;
        for (int i = 0; i < 5 && !placed; ++i) {
            if (nb == pat1[i]) {
                d.s1[i] |= vbit(v);
                placed = true;
            } else if (nb == pat2[i]) {
                d.s2[i] |= vbit(v);
                placed = true;
            } else if (nb == pat3[i]) {
                d.s3[i] |= vbit(v);
                placed = true;
            } else if (nb == pat4[i]) {
                d.s4[i] |= vbit(v);
                placed = true;
            }
        }
        if (!placed) d.unclassified |= vbit(v);
    }
    return d;
}

}  // namespace critgraph
