#pragma once

// Vertex-criticality and the structural necessary conditions used for
// pruning: comparable vertices, clique cutsets, and the anti-complete
// X/Y pair condition.
//
// Criticality is tested through single-vertex deletions only: chi is
// monotone under induced subgraphs, so if chi(G) = k and every G - v is
// (k-1)-colourable then every proper induced subgraph has chi < k.
//
// Neighbourhood containment comes in two readings. For nonadjacent pairs
// they coincide; open containment N(u) <= N(v) can never hold for an
// adjacent pair (v sits in N(u) but not in N(v)), which is the reading
// the generator's forcing rule relies on. Both predicates are provided.

#include <optional>
#include <utility>
#include <vector>

#include "critgraph/colour.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

// First (lexicographic) ordered pair u != v with N(u) <= N(v).
inline std::optional<std::pair<int, int>> comparable_pair(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            if ((g.neighbours(u) & ~g.neighbours(v)) == 0) return std::make_pair(u, v);
        }
    return std::nullopt;
}

// Closed-neighbourhood variant: N[u] <= N[v].
inline std::optional<std::pair<int, int>> comparable_pair_closed(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            const VertexSet nu = g.neighbours(u) | vbit(u);
            const VertexSet nv = g.neighbours(v) | vbit(v);
            if ((nu & ~nv) == 0) return std::make_pair(u, v);
        }
    return std::nullopt;
}

// A clique whose removal disconnects g (not necessarily minimal); cliques
// are enumerated in lexicographic order, so the returned cutset is stable.
// Exponential in principle; intended for the small graphs handled here.
inline std::optional<VertexSet> clique_cutset(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("clique_cutset: disconnected input");
    if (n <= 2) return std::nullopt;
    bool complete = true;
    for (int v = 0; v < n && complete; ++v)
        if (g.degree(v) != n - 1) complete = false;
    if (complete) return std::nullopt;

    std::optional<VertexSet> found;
    struct Rec {
        const Graph& g;
        std::optional<VertexSet>& found;
        void run(VertexSet clique, int from) {
            if (found) return;
            if (clique) {
                const VertexSet rest = g.vertices() & ~clique;
                if (set_size(rest) >= 2 && components(g, rest).size() >= 2) {
                    found = clique;
                    return;
                }
            }
            for (int v = from; v < g.order(); ++v) {
                if ((g.neighbours(v) & clique) != clique) continue;
                run(clique | vbit(v), v + 1);
                if (found) return;
            }
        }
    } rec{g, found};
    rec.run(0, 0);
    return found;
}

namespace detail {

// Next same-popcount mask (Gosper); 0 when exhausted within limit bits.
inline VertexSet next_same_size(VertexSet s, int nbits) {
    const VertexSet c = s & (~s + 1);
    const VertexSet r = s + c;
    VertexSet next = (((r ^ s) >> 2) / c) | r;
    if (nbits < 64 && next >= (VertexSet{1} << nbits)) return 0;
    return next;
}

}  // namespace detail

// Bounded search for nonempty disjoint X, Y with X anti-complete to Y,
// chi(X) <= chi(Y) and Y complete to N(X); critical graphs have none.
// A miss only means none within the cap.
inline std::optional<std::pair<VertexSet, VertexSet>> lemma3_witness(const Graph& g, int size_cap) {
    if (size_cap < 1) throw std::invalid_argument("lemma3_witness: size_cap < 1");
    const int n = g.order();
    if (n < 2) return std::nullopt;
    for (int xs = 1; xs <= size_cap && xs <= n; ++xs) {
        for (VertexSet x = full_set(xs); x; x = detail::next_same_size(x, n)) {
            const VertexSet nx = set_neighbourhood(g, x);
            VertexSet cand = g.vertices() & ~(x | nx);
            if (!cand) continue;
            VertexSet cy = 0;
            for (int v : VertexRange(cand))
                if ((nx & ~g.neighbours(v)) == 0) cy |= vbit(v);
            if (!cy) continue;
            const int chi_x = chromatic_number(induced_subgraph(g, x));
            if (chi_x == 1) return std::make_pair(x, vbit(first_vertex(cy)));
            for (int ys = 1; ys <= size_cap && ys <= set_size(cy); ++ys) {
                // Combinations of cy of size ys, in ascending mask order.
                std::vector<int> members;
                for (int v : VertexRange(cy)) members.push_back(v);
                const int m = static_cast<int>(members.size());
                for (VertexSet pick = full_set(ys); pick; pick = detail::next_same_size(pick, m)) {
                    VertexSet y = 0;
                    for (int b : VertexRange(pick)) y |= vbit(members[b]);
                    if (chromatic_number(induced_subgraph(g, y)) >= chi_x) return std::make_pair(x, y);
                }
            }
        }
    }
    return std::nullopt;
}

struct Lemma2Violation {
    enum class Kind { disconnected, clique_cutset, comparable_pair };
    Kind kind;
    VertexSet cutset = 0;                 // clique_cutset
    std::pair<int, int> pair = {-1, -1};  // comparable_pair
};

struct CriticalityReport {
    bool is_critical = false;
    int chi = 0;
    std::optional<int> failing_vertex;  // chi(G - v) == chi(G)
    std::optional<Lemma2Violation> lemma2_violation;
    std::optional<std::pair<VertexSet, VertexSet>> lemma3_violation;
};

// Verdict only, no diagnostics: chi(g) = k and chi(g - v) < k for all v.
inline bool is_vertex_critical_quick(const Graph& g, int k) {
    if (k < 1 || g.order() == 0) return false;
    if (k_colourable(g, k - 1)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!k_colourable(delete_vertex(g, v), k - 1)) return false;
    // Every deletion is (k-1)-colourable, so chi(g) <= k; with the failed
    // (k-1)-colouring above, chi(g) = k exactly.
    return true;
}

// Full report. Diagnostics fill the Lemma 2 witness fields; the bounded
// Lemma 3 search is only run when a cap is supplied (it is the costly one).
inline CriticalityReport is_k_vertex_critical(const Graph& g, int k, bool diagnose = false,
                                              std::optional<int> lemma3_cap = std::nullopt) {
    if (k < 1) throw std::invalid_argument("is_k_vertex_critical: k < 1");
    CriticalityReport r;
    r.chi = chromatic_number(g);
    for (int v = 0; v < g.order(); ++v) {
        if (!k_colourable(delete_vertex(g, v), r.chi - 1)) {
            r.failing_vertex = v;
            break;
        }
    }
    r.is_critical = (r.chi == k) && !r.failing_vertex && g.order() > 0;
    if (diagnose) {
        if (!is_connected(g) && g.order() > 1) {
            r.lemma2_violation = Lemma2Violation{Lemma2Violation::Kind::disconnected, 0, {-1, -1}};
            r.is_critical = false;
        } else if (auto p = comparable_pair(g)) {
            r.lemma2_violation = Lemma2Violation{Lemma2Violation::Kind::comparable_pair, 0, *p};
        } else if (g.order() > 1) {
            if (auto c = clique_cutset(g))
                r.lemma2_violation = Lemma2Violation{Lemma2Violation::Kind::clique_cutset, *c, {-1, -1}};
        }
        if (lemma3_cap) r.lemma3_violation = lemma3_witness(g, *lemma3_cap);
    }
    return r;
}

}  // namespace critgraph
