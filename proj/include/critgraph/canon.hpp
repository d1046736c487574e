#pragma once

// Canonical labelling by iterated neighbourhood partition refinement with
// backtracking over target cells. The canonical form is the graph6 line of
// the relabelling whose adjacency encoding is lexicographically least over
// all candidate labellings, so two graphs get equal forms exactly when
// they are isomorphic. Cell selection and tie-breaks are fixed (smallest
// non-singleton cell, lowest vertex first) so forms are stable across runs.

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/graph6.hpp"

namespace critgraph {

using CanonicalForm = std::string;

namespace detail {

struct CanonSearch {
    explicit CanonSearch(const Graph& g) : n(g.order()) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbours(v);
    }

    int n;
    std::array<VertexSet, kMaxOrder> adj{};

    // lab holds the vertices in partition order; ptn[i] == 1 means the
    // vertices at positions i and i+1 lie in the same cell.
    struct State {
        std::array<std::uint8_t, kMaxOrder> lab;
        std::array<std::uint8_t, kMaxOrder> ptn;
    };

    bool have_best = false;
    std::array<VertexSet, kMaxOrder> best_rel{};
    std::array<std::uint8_t, kMaxOrder> best_lab{};

    static constexpr int kMaxAuts = 64;
    std::vector<std::array<std::uint8_t, kMaxOrder>> auts;

    std::array<int, kMaxOrder> path{};
    int path_len = 0;

    void run() {
        if (n == 0) return;
        State st;
        for (int i = 0; i < n; ++i) {
            st.lab[i] = static_cast<std::uint8_t>(i);
            st.ptn[i] = 1;
        }
        st.ptn[n - 1] = 0;
        VertexSet initial = full_set(n);
        refine(st, &initial, 1);
        search(st);
    }

    void refine(State& st, const VertexSet* seed, int seed_count) {
        // Splitters are snapshots of cell contents; refining by a stale
        // (since split) snapshot is redundant but harmless because every
        // subcell is enqueued too.
        std::array<VertexSet, 4 * kMaxOrder> queue;
        int qhead = 0, qtail = 0;
        for (int i = 0; i < seed_count; ++i) queue[qtail++] = seed[i];
        std::array<int, kMaxOrder> cnt{};
        while (qhead < qtail) {
            const VertexSet splitter = queue[qhead++];
            int pos = 0;
            while (pos < n) {
                int end = pos;
                while (st.ptn[end] == 1) ++end;
                const int size = end - pos + 1;
                if (size >= 2) {
                    int lo = kMaxOrder, hi = -1;
                    for (int i = pos; i <= end; ++i) {
                        cnt[i] = std::popcount(adj[st.lab[i]] & splitter);
                        lo = std::min(lo, cnt[i]);
                        hi = std::max(hi, cnt[i]);
                    }
                    if (lo != hi) {
                        // Stable bucket sort of the cell by count.
                        std::array<std::uint8_t, kMaxOrder> tmp;
                        int out = pos;
                        for (int c = lo; c <= hi; ++c) {
                            for (int i = pos; i <= end; ++i)
                                if (cnt[i] == c) tmp[out++] = st.lab[i];
                        }
                        int i = pos;
                        for (int c = lo; c <= hi; ++c) {
                            VertexSet cellmask = 0;
                            const int cell_start = i;
                            for (int j = pos; j <= end; ++j)
                                if (cnt[j] == c) ++i;
                            if (i == cell_start) continue;
                            for (int j = cell_start; j < i; ++j) {
                                st.lab[j] = tmp[j];
                                st.ptn[j] = 1;
                                cellmask |= vbit(tmp[j]);
                            }
                            st.ptn[i - 1] = 0;
                            queue[qtail++] = cellmask;
                        }
                    }
                }
                pos = end + 1;
            }
        }
    }

    void search(const State& st) {
        // Target cell: smallest non-singleton, first among ties.
        int cell_start = -1, cell_end = -1, cell_size = n + 1;
        int pos = 0;
        while (pos < n) {
            int end = pos;
            while (st.ptn[end] == 1) ++end;
            const int size = end - pos + 1;
            if (size >= 2 && size < cell_size) {
                cell_size = size;
                cell_start = pos;
                cell_end = end;
            }
            pos = end + 1;
        }
        if (cell_start < 0) {
            leaf(st);
            return;
        }

        std::array<int, kMaxOrder> cand{};
        int cand_count = 0;
        for (int i = cell_start; i <= cell_end; ++i) cand[cand_count++] = st.lab[i];
        std::sort(cand.begin(), cand.begin() + cand_count);

        VertexSet tried = 0;
        for (int ci = 0; ci < cand_count; ++ci) {
            const int v = cand[ci];
            if (tried && skip_candidate(v, tried)) continue;
            State child = st;
            // Make v a singleton at the front of its cell.
            for (int i = cell_start; i <= cell_end; ++i) {
                if (child.lab[i] == v) {
                    child.lab[i] = child.lab[cell_start];
                    child.lab[cell_start] = static_cast<std::uint8_t>(v);
                    break;
                }
            }
            child.ptn[cell_start] = 0;
            VertexSet single = vbit(v);
            refine(child, &single, 1);
            path[path_len++] = v;
            search(child);
            --path_len;
            tried |= vbit(v);
        }
    }

    bool skip_candidate(int v, VertexSet tried) const {
        // Interchangeable twins: swapping u and v is an automorphism.
        for (int u : VertexRange(tried))
            if ((adj[u] & ~vbit(v)) == (adj[v] & ~vbit(u))) return true;
        for (const auto& sigma : auts) {
            bool fixes_path = true;
            for (int t = 0; t < path_len; ++t)
                if (sigma[path[t]] != path[t]) {
                    fixes_path = false;
                    break;
                }
            if (fixes_path && (tried & vbit(sigma[v]))) return true;
        }
        return false;
    }

    void leaf(const State& st) {
        std::array<int, kMaxOrder> label_of{};
        for (int i = 0; i < n; ++i) label_of[st.lab[i]] = i;
        std::array<VertexSet, kMaxOrder> rel{};
        for (int i = 0; i < n; ++i) {
            VertexSet row = 0;
            for (int w : VertexRange(adj[st.lab[i]])) row |= vbit(label_of[w]);
            rel[i] = row;
        }
        if (!have_best) {
            have_best = true;
            best_rel = rel;
            best_lab = st.lab;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (rel[i] < best_rel[i]) {
                best_rel = rel;
                best_lab = st.lab;
                return;
            }
            if (rel[i] > best_rel[i]) return;
        }
        // Equal encoding: the position-wise vertex map is an automorphism.
        if (static_cast<int>(auts.size()) < kMaxAuts) {
            std::array<std::uint8_t, kMaxOrder> sigma{};
            for (int i = 0; i < n; ++i) sigma[st.lab[i]] = best_lab[i];
            auts.push_back(sigma);
        }
    }
};

}  // namespace detail

// Labelling map: vertex v of g gets canonical label result[v].
inline std::vector<int> canonical_labeling(const Graph& g) {
    detail::CanonSearch cs(g);
    cs.run();
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[cs.best_lab[i]] = i;
    return perm;
}

inline Graph canonical_relabel(const Graph& g) {
    detail::CanonSearch cs(g);
    cs.run();
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j : VertexRange(cs.best_rel[i]))
            if (i < j) h.add_edge(i, j);
    return h;
}

inline CanonicalForm canonical_form(const Graph& g) { return encode_graph6(canonical_relabel(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

// Exact insert-or-check set of canonical forms, sharded for concurrent use.
class SeenStore {
public:
    // True when the form was newly inserted.
    bool insert(const CanonicalForm& form) {
        Shard& sh = shard(form);
        std::lock_guard<std::mutex> lock(sh.mutex);
        const bool fresh = sh.set.insert(form).second;
        if (fresh) sh.digest ^= fnv1a(form);
        return fresh;
    }

    bool contains(const CanonicalForm& form) const {
        const Shard& sh = shard(form);
        std::lock_guard<std::mutex> lock(sh.mutex);
        return sh.set.count(form) != 0;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (const Shard& sh : shards_) {
            std::lock_guard<std::mutex> lock(sh.mutex);
            total += sh.set.size();
        }
        return total;
    }

    // Order-independent digest of the stored forms.
    std::uint64_t digest() const {
        std::uint64_t d = 0;
        for (const Shard& sh : shards_) {
            std::lock_guard<std::mutex> lock(sh.mutex);
            d ^= sh.digest;
        }
        return d;
    }

    void clear() {
        for (Shard& sh : shards_) {
            std::lock_guard<std::mutex> lock(sh.mutex);
            sh.set.clear();
            sh.digest = 0;
        }
    }

    static std::uint64_t fnv1a(const std::string& s) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_set<std::string> set;
        std::uint64_t digest = 0;
    };
    static constexpr int kShards = 64;
    std::array<Shard, kShards> shards_;

    Shard& shard(const std::string& s) { return shards_[fnv1a(s) % kShards]; }
    const Shard& shard(const std::string& s) const { return shards_[fnv1a(s) % kShards]; }
};

}  // namespace critgraph
