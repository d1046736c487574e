#pragma once

// Induced-subgraph search by backtracking on pattern vertices in a static
// order that maximizes connectivity to the already-mapped prefix, with
// degree and neighbourhood-bitmask pruning. Patterns here have at most a
// handful of vertices, so this is fast and simple.

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/named.hpp"

namespace critgraph {

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

inline bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    const int pn = pattern.order();
    if (static_cast<int>(e.map.size()) != pn) return false;
    VertexSet used = 0;
    for (int p = 0; p < pn; ++p) {
        const int h = e.map[p];
        if (h < 0 || h >= host.order() || (used & vbit(h))) return false;
        used |= vbit(h);
    }
    for (int p = 0; p < pn; ++p)
        for (int q = p + 1; q < pn; ++q)
            if (pattern.edge(p, q) != host.edge(e.map[p], e.map[q])) return false;
    return true;
}

namespace detail {

// Pattern vertices ordered to maximize connectivity to the mapped prefix;
// an optional fixed first vertex lets pinned searches propagate from the
// pinned position immediately.
inline std::vector<int> induced_search_order(const Graph& pat, int start = -1) {
    const int pn = pat.order();
    std::vector<int> order;
    std::vector<bool> chosen(pn, false);
    if (start >= 0) {
        order.push_back(start);
        chosen[start] = true;
    }
    while (static_cast<int>(order.size()) < pn) {
        int pick = -1, pick_conn = -1, pick_deg = -1;
        for (int p = 0; p < pn; ++p) {
            if (chosen[p]) continue;
            int conn = 0;
            for (int q : order)
                if (pat.edge(p, q)) ++conn;
            const int deg = pat.degree(p);
            if (conn > pick_conn || (conn == pick_conn && deg > pick_deg)) {
                pick = p;
                pick_conn = conn;
                pick_deg = deg;
            }
        }
        order.push_back(pick);
        chosen[pick] = true;
    }
    return order;
}

struct InducedSearch {
    const Graph& host;
    const Graph& pat;
    const std::vector<int>& order;
    std::array<int, kMaxOrder> map{};
    int pinned_pattern = -1;
    int pinned_host = -1;

    bool run(int t, VertexSet used) {
        if (t == pat.order()) return true;
        const int p = order[t];
        VertexSet cand;
        if (p == pinned_pattern) {
            cand = vbit(pinned_host);
        } else {
            cand = host.vertices();
            if (pinned_pattern >= 0) cand &= ~vbit(pinned_host);
        }
        cand &= ~used;
        for (int s = 0; s < t; ++s) {
            const int q = order[s];
            cand &= pat.edge(p, q) ? host.neighbours(map[q]) : ~host.neighbours(map[q]);
            if (!cand) return false;
        }
        const int pdeg = pat.degree(p);
        for (int v : VertexRange(cand)) {
            if (host.degree(v) < pdeg) continue;
            map[p] = v;
            if (run(t + 1, used | vbit(v))) return true;
        }
        return false;
    }
};

// One representative per automorphism orbit, by brute force over
// permutations; patterns are tiny. Falls back to all vertices when the
// pattern is larger than fits brute force.
inline std::vector<int> pattern_orbit_reps(const Graph& pat) {
    const int pn = pat.order();
    std::vector<int> rep(pn);
    for (int v = 0; v < pn; ++v) rep[v] = v;
    if (pn > 8) return rep;
    std::vector<int> perm(pn);
    for (int v = 0; v < pn; ++v) perm[v] = v;
    auto find = [&](auto&& self, int v) -> int { return rep[v] == v ? v : rep[v] = self(self, rep[v]); };
    do {
        bool aut = true;
        for (int u = 0; u < pn && aut; ++u)
            for (int v = u + 1; v < pn && aut; ++v)
                if (pat.edge(u, v) != pat.edge(perm[u], perm[v])) aut = false;
        if (aut) {
            for (int v = 0; v < pn; ++v) {
                int a = find(find, v), b = find(find, perm[v]);
                if (a != b) rep[std::max(a, b)] = std::min(a, b);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> reps;
    for (int v = 0; v < pn; ++v)
        if (find(find, v) == v) reps.push_back(v);
    return reps;
}

}  // namespace detail

struct Pattern {
    std::string name;
    Graph graph;
    std::vector<int> search_order;
    std::vector<int> pin_reps;  // one pattern vertex per automorphism orbit
    std::vector<std::vector<int>> pin_orders;  // search order per rep, rep first
    bool connected = true;
};

inline Pattern make_pattern(const std::string& name, const Graph& g) {
    Pattern p;
    p.name = name;
    p.graph = g;
    p.search_order = detail::induced_search_order(g);
    p.pin_reps = detail::pattern_orbit_reps(g);
    for (int rep : p.pin_reps) p.pin_orders.push_back(detail::induced_search_order(g, rep));
    p.connected = is_connected(g);
    return p;
}

using PatternFamily = std::vector<Pattern>;

inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.order() == 0) return Embedding{{}};
    const std::vector<int> order = detail::induced_search_order(pattern);
    detail::InducedSearch s{host, pattern, order};
    if (!s.run(0, 0)) return std::nullopt;
    Embedding e;
    e.map.assign(s.map.begin(), s.map.begin() + pattern.order());
    return e;
}

// Embedding constrained to use the given host vertex, or nothing.
inline std::optional<Embedding> find_induced_using(const Graph& host, const Pattern& pattern, int host_vertex) {
    if (pattern.graph.order() > host.order()) return std::nullopt;
    if (pattern.graph.order() == 0) return std::nullopt;
    for (std::size_t i = 0; i < pattern.pin_reps.size(); ++i) {
        detail::InducedSearch s{host, pattern.graph, pattern.pin_orders[i]};
        s.pinned_pattern = pattern.pin_reps[i];
        s.pinned_host = host_vertex;
        if (s.run(0, 0)) {
            Embedding e;
            e.map.assign(s.map.begin(), s.map.begin() + pattern.graph.order());
            return e;
        }
    }
    return std::nullopt;
}

inline bool is_family_free(const Graph& host, const PatternFamily& fam) {
    for (const Pattern& p : fam) {
        if (p.graph.order() > host.order()) continue;
        detail::InducedSearch s{host, p.graph, p.search_order};
        if (s.run(0, 0)) return false;
    }
    return true;
}

// Family check for host = previous graph + one vertex, assuming the
// previous graph was already family-free: any embedding must use it.
inline bool is_family_free_incremental(const Graph& host, const PatternFamily& fam, int new_vertex) {
    for (const Pattern& p : fam)
        if (find_induced_using(host, p, new_vertex)) return false;
    return true;
}

// All induced 5-cycles, each reported once: lowest vertex first, then its
// smaller cycle-neighbour, in cycle order.
inline std::vector<std::array<int, 5>> all_induced_c5(const Graph& g, bool first_only = false) {
    std::vector<std::array<int, 5>> out;
    const int n = g.order();
    for (int v0 = 0; v0 < n; ++v0) {
        const VertexSet later = g.vertices() & ~(vbit(v0) | (vbit(v0) - 1));
        for (int v1 : VertexRange(g.neighbours(v0) & later)) {
            for (int v4 : VertexRange(g.neighbours(v0) & later & ~(vbit(v1) | (vbit(v1) - 1)))) {
                if (g.edge(v1, v4)) continue;
                const VertexSet avoid01 = g.neighbours(v0) | vbit(v0) | vbit(v1) | vbit(v4);
                for (int v2 : VertexRange(g.neighbours(v1) & later & ~avoid01)) {
                    if (g.edge(v2, v4)) continue;
                    VertexSet cand3 = g.neighbours(v2) & g.neighbours(v4) & later;
                    cand3 &= ~(g.neighbours(v0) | g.neighbours(v1));
                    cand3 &= ~(vbit(v0) | vbit(v1) | vbit(v2) | vbit(v4));
                    for (int v3 : VertexRange(cand3)) {
                        out.push_back({v0, v1, v2, v3, v4});
                        if (first_only) return out;
                    }
                }
            }
        }
    }
    return out;
}

inline std::optional<std::array<int, 5>> find_induced_c5(const Graph& g) {
    auto found = all_induced_c5(g, /*first_only=*/true);
    if (found.empty()) return std::nullopt;
    return found[0];
}

namespace detail {

inline bool has_odd_hole(const Graph& g) {
    const int n = g.order();
    std::array<int, kMaxOrder> path{};
    // Grow induced paths from each start; a next vertex may touch only the
    // path's end, or close a cycle by touching exactly the end and start.
    struct Dfs {
        const Graph& g;
        std::array<int, kMaxOrder>& path;
        bool found = false;
        void run(int len, VertexSet on_path, VertexSet allowed) {
            if (found) return;
            const int s = path[0], last = path[len - 1];
            for (int w : VertexRange(g.neighbours(last) & allowed)) {
                const VertexSet touches = g.neighbours(w) & on_path;
                if (touches == vbit(last)) {
                    path[len] = w;
                    run(len + 1, on_path | vbit(w), allowed & ~vbit(w));
                    if (found) return;
                } else if (touches == (vbit(last) | vbit(s)) && len + 1 >= 5 && (len + 1) % 2 == 1) {
                    found = true;
                    return;
                }
            }
        }
    } dfs{g, path};
    for (int s = 0; s < n && !dfs.found; ++s) {
        path[0] = s;
        const VertexSet later = g.vertices() & ~(vbit(s) | (vbit(s) - 1));
        for (int b : VertexRange(g.neighbours(s) & later)) {
            path[1] = b;
            dfs.run(2, vbit(s) | vbit(b), later & ~vbit(b));
            if (dfs.found) break;
        }
    }
    return dfs.found;
}

}  // namespace detail

// Strong-perfect-graph-theorem test: no induced odd cycle of length >= 5
// in the graph or its complement. Guarded, the cycle enumeration is
// exponential in principle.
inline bool is_perfect(const Graph& g) {
    if (g.order() > 20) throw std::invalid_argument("is_perfect: order above guard (20)");
    return !detail::has_odd_hole(g) && !detail::has_odd_hole(complement(g));
}

// "p6,bull" style comma list of named graphs.
inline PatternFamily parse_family(const std::string& csv) {
    PatternFamily fam;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        fam.push_back(make_pattern(item, build_named(item)));
    }
    return fam;
}

// One "name<TAB>graph6" line per pattern.
inline PatternFamily load_family_file(std::istream& in) {
    PatternFamily fam;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::invalid_argument("family file: expected name<TAB>graph6");
        fam.push_back(make_pattern(line.substr(0, tab), decode_graph6(line.substr(tab + 1))));
    }
    return fam;
}

inline PatternFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("family file: cannot open " + path);
    return load_family_file(in);
}

}  // namespace critgraph
