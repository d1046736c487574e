#pragma once

// Exact k-colourability, chromatic number and clique number. Backtracking
// with saturation-first vertex choice and colour symmetry breaking (colour
// c is available only once c-1 is in use); instances here are small enough
// that exact answers come back in microseconds.

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct Colouring {
    int k = 0;
    std::vector<int> colour;  // one entry per vertex, values in [0, k)
};

inline bool is_proper(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.colour.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (c.colour[v] < 0 || c.colour[v] >= c.k) return false;
        for (int u : VertexRange(g.neighbours(v) & ~((vbit(v) << 1) - 1)))
            if (c.colour[u] == c.colour[v]) return false;
    }
    return true;
}

inline VertexSet max_clique(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    VertexSet best = 0;
    int best_size = 0;
    VertexSet current = 0;

    struct Frame {
        const Graph& g;
        VertexSet& best;
        int& best_size;
        VertexSet& current;
        void expand(int size, VertexSet cand) {
            if (!cand) {
                if (size > best_size) {
                    best_size = size;
                    best = current;
                }
                return;
            }
            if (size + std::popcount(cand) <= best_size) return;
            // Pivot on a candidate covering the most of cand.
            int pivot = -1, pivot_deg = -1;
            for (int u : VertexRange(cand)) {
                const int d = std::popcount(g.neighbours(u) & cand);
                if (d > pivot_deg) {
                    pivot_deg = d;
                    pivot = u;
                }
            }
            VertexSet ext = cand & ~g.neighbours(pivot);
            for (int v : VertexRange(ext)) {
                current |= vbit(v);
                expand(size + 1, cand & g.neighbours(v));
                current &= ~vbit(v);
                cand &= ~vbit(v);
            }
        }
    } frame{g, best, best_size, current};

    frame.expand(0, g.vertices());
    return best;
}

inline int clique_number(const Graph& g) { return std::popcount(max_clique(g)); }

namespace detail {

struct ColourSearch {
    const Graph& g;
    int n;
    int k;
    std::vector<int> colour;
    std::array<VertexSet, kMaxOrder> cls{};
    int used = 0;

    ColourSearch(const Graph& graph, int kk) : g(graph), n(graph.order()), k(kk), colour(n, -1) {}

    bool solve(VertexSet uncoloured) {
        if (!uncoloured) return true;
        // Most saturated uncoloured vertex; ties by degree, then lowest id.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v : VertexRange(uncoloured)) {
            int sat = 0;
            for (int c = 0; c < used; ++c)
                if (cls[c] & g.neighbours(v)) ++sat;
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (cls[c] & g.neighbours(pick)) continue;
            cls[c] |= vbit(pick);
            colour[pick] = c;
            const int prev_used = used;
            used = std::max(used, c + 1);
            if (solve(uncoloured & ~vbit(pick))) return true;
            used = prev_used;
            colour[pick] = -1;
            cls[c] &= ~vbit(pick);
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<Colouring> k_colourable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_colourable: k < 0");
    const int n = g.order();
    if (n == 0) return Colouring{k, {}};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        Colouring c{k, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) c.colour[v] = v;
        return c;
    }
    // Cheap greedy clique bound.
    {
        VertexSet cand = g.vertices();
        int size = 0;
        while (cand) {
            int pick = -1, deg = -1;
            for (int v : VertexRange(cand)) {
                const int d = std::popcount(g.neighbours(v) & cand);
                if (d > deg) {
                    deg = d;
                    pick = v;
                }
            }
            ++size;
            cand &= g.neighbours(pick);
        }
        if (size > k) return std::nullopt;
    }
    detail::ColourSearch search(g, k);
    if (!search.solve(g.vertices())) return std::nullopt;
    return Colouring{k, search.colour};
}

inline int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = clique_number(g);; ++k)
        if (k_colourable(g, k)) return k;
}

}  // namespace critgraph
