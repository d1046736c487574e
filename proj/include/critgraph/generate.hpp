#pragma once

// Exhaustive seeded generation of k-vertex-critical family-free graphs:
// start from the seed and recursively add one vertex with every possible
// neighbourhood, pruned by
//   P1 family-free      - a graph with a forbidden pattern has no
//                         family-free supergraph;
//   P2 colour bound     - a graph that is not (k-1)-colourable cannot be a
//                         proper induced subgraph of a k-vertex-critical
//                         graph, so it is output-tested and never extended
//                         (a (k-1)-colourable graph can never be output);
//   P3 comparable pair  - when the current graph has u != v with
//                         N(u) <= N(v), any critical supergraph contains a
//                         later vertex adjacent to u and not v, so only
//                         such extensions are generated (one fixed pair
//                         per node, the lexicographically least);
//   P4 x/y forcing      - same scheme for a bounded anti-complete X/Y pair
//                         (optional; subsumes P3 when found at cap 1);
//   P5 isomorph dedup   - canonical forms seen before are not re-expanded.
// Every emitted graph re-verifies the definition, so pruning can only cost
// completeness, never soundness; P2/P3/P4 children that are skipped are
// provably non-critical and provably not below any critical supergraph
// that is not reachable some other way.
//
// Expansion works on canonical relabellings, so the children of a node do
// not depend on which isomorphic copy reached it first, and the final
// output set is identical for any worker count.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "critgraph/canon.hpp"
#include "critgraph/colour.hpp"
#include "critgraph/critical.hpp"
#include "critgraph/detect.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

struct PruneFlags {
    bool iso_dedup = true;
    bool family_free = true;
    bool colour_bound = true;
    bool comparable_forcing = true;
    bool lemma3_forcing = false;
};

struct GenerationTask {
    int k = 5;
    PatternFamily family;
    Graph seed;
    std::optional<int> max_order;
    PruneFlags pruning;
    int workers = 1;
    int lemma3_cap = 2;
    std::uint64_t max_nodes = 0;   // 0 = unlimited
    double max_seconds = 0.0;      // 0 = unlimited
    std::string checkpoint_path;   // empty = no checkpoints
    std::uint64_t checkpoint_interval = 500000;  // nodes between checkpoints
    std::string resume_path;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t children_generated = 0;
    std::uint64_t iso_rejections = 0;
    std::uint64_t prune_family = 0;
    std::uint64_t prune_colour_discard = 0;
    std::uint64_t output_candidates = 0;
    std::uint64_t forcing_nodes = 0;
    std::uint64_t outputs = 0;
    double wall_seconds = 0.0;
    bool exhaustive = true;
    std::optional<int> max_order;

    std::string to_key_values() const {
        std::ostringstream s;
        s << "nodes_expanded=" << nodes_expanded << '\n'
          << "children_generated=" << children_generated << '\n'
          << "iso_rejections=" << iso_rejections << '\n'
          << "prune_family=" << prune_family << '\n'
          << "prune_colour_discard=" << prune_colour_discard << '\n'
          << "output_candidates=" << output_candidates << '\n'
          << "forcing_nodes=" << forcing_nodes << '\n'
          << "outputs=" << outputs << '\n'
          << "wall_seconds=" << wall_seconds << '\n'
          << "exhaustive=" << (exhaustive ? "true" : "false") << '\n';
        if (max_order) s << "max_order=" << *max_order << '\n';
        return s.str();
    }
};

struct GenerationResult {
    std::vector<std::string> outputs;  // canonical graph6, sorted
    SearchStats stats;
};

namespace detail {

inline std::uint64_t task_digest(const GenerationTask& t) {
    std::ostringstream s;
    s << "k=" << t.k << ";seed=" << canonical_form(t.seed) << ";cap=";
    if (t.max_order) s << *t.max_order;
    s << ";rules=" << t.pruning.iso_dedup << t.pruning.family_free << t.pruning.colour_bound
      << t.pruning.comparable_forcing << t.pruning.lemma3_forcing << ";l3cap=" << t.lemma3_cap << ";family=";
    std::vector<std::string> fams;
    for (const Pattern& p : t.family) fams.push_back(canonical_form(p.graph));
    std::sort(fams.begin(), fams.end());
    for (const auto& f : fams) s << f << ',';
    return SeenStore::fnv1a(s.str());
}

class Generator {
public:
    explicit Generator(const GenerationTask& task) : task_(task), start_(std::chrono::steady_clock::now()) {}

    GenerationResult run() {
        if (task_.k < 2) throw std::invalid_argument("generate: k must be >= 2");
        // Cheapest patterns first; rejection order does not change results.
        std::stable_sort(task_.family.begin(), task_.family.end(),
                         [](const Pattern& a, const Pattern& b) { return a.graph.order() < b.graph.order(); });
        if (!is_family_free(task_.seed, task_.family))
            throw std::invalid_argument("generate: seed is not family-free");
        if (task_.seed.order() == 0) throw std::invalid_argument("generate: empty seed");
        if (task_.max_order && *task_.max_order < task_.seed.order())
            throw std::invalid_argument("generate: max_order below seed order");

        if (!task_.resume_path.empty()) {
            load_checkpoint(task_.resume_path);
        } else {
            const Graph seed = canonical_relabel(task_.seed);
            const std::string form = encode_graph6(seed);
            seen_.insert(form);
            const auto col = k_colourable(seed, task_.k - 1);
            if (!col && output_test(seed)) add_output(form);
            const bool extendable = (col || !task_.pruning.colour_bound) &&
                                    (!task_.max_order || seed.order() < *task_.max_order) && seed.order() < kMaxOrder;
            if (extendable) frontier_.push_back(form);
        }

        const int workers = std::max(1, task_.workers);
        if (workers == 1) {
            single_thread_loop();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int i = 0; i < workers; ++i) pool.emplace_back([this] { worker_loop(); });
            for (auto& t : pool) t.join();
        }

        GenerationResult result;
        result.outputs.assign(outputs_.begin(), outputs_.end());
        result.stats = snapshot_stats();
        if (!task_.checkpoint_path.empty() && !result.stats.exhaustive) write_checkpoint(task_.checkpoint_path);
        return result;
    }

private:
    GenerationTask task_;
    std::chrono::steady_clock::time_point start_;

    std::mutex mutex_;
    std::condition_variable cv_;
    std::vector<std::string> frontier_;
    std::vector<std::string> in_flight_;
    int active_ = 0;
    std::atomic<bool> over_budget_{false};

    SeenStore seen_;
    std::set<std::string> outputs_;
    std::mutex output_mutex_;

    std::atomic<std::uint64_t> nodes_{0}, children_{0}, iso_rej_{0}, pr_family_{0}, pr_colour_{0},
        out_cand_{0}, forcing_nodes_{0};
    std::atomic<std::uint64_t> checkpoint_due_{0};

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool budget_exceeded() {
        if (over_budget_.load(std::memory_order_relaxed)) return true;
        if (task_.max_nodes && nodes_.load(std::memory_order_relaxed) >= task_.max_nodes) return true;
        if (task_.max_seconds > 0 && elapsed() >= task_.max_seconds) return true;
        return false;
    }

    void single_thread_loop() {
        while (!frontier_.empty()) {
            if (budget_exceeded()) {
                over_budget_ = true;
                break;
            }
            const std::string form = frontier_.back();
            frontier_.pop_back();
            if (!process(form)) {
                frontier_.push_back(form);  // aborted mid-node; keep it pending
                over_budget_ = true;
                break;
            }
            maybe_checkpoint();
        }
    }

    void worker_loop() {
        std::unique_lock<std::mutex> lock(mutex_);
        for (;;) {
            while (frontier_.empty() && active_ > 0 && !over_budget_) cv_.wait(lock);
            if (frontier_.empty() || over_budget_) {
                cv_.notify_all();
                return;
            }
            const std::string form = frontier_.back();
            frontier_.pop_back();
            in_flight_.push_back(form);
            ++active_;
            lock.unlock();

            if (budget_exceeded()) {
                lock.lock();
                over_budget_ = true;
                // Put the node back so a checkpoint keeps it pending.
                frontier_.push_back(form);
                drop_in_flight(form);
                --active_;
                cv_.notify_all();
                return;
            }
            const bool completed = process(form);
            maybe_checkpoint();

            lock.lock();
            if (!completed) {
                over_budget_ = true;
                frontier_.push_back(form);
            }
            drop_in_flight(form);
            --active_;
            if (frontier_.empty() && active_ == 0) cv_.notify_all();
            if (!frontier_.empty()) cv_.notify_one();
        }
    }

    void drop_in_flight(const std::string& form) {
        for (auto it = in_flight_.begin(); it != in_flight_.end(); ++it)
            if (*it == form) {
                in_flight_.erase(it);
                return;
            }
    }

    // The node is a canonical relabelling, so forcing pair selection is
    // label-independent and the explored tree does not depend on which
    // isomorphic copy got enqueued. Returns false when the node was
    // abandoned mid-way on a blown budget; the caller re-queues it.
    bool process(const std::string& form) {
        const Graph g = decode_graph6(form);
        nodes_.fetch_add(1, std::memory_order_relaxed);
        const int n = g.order();
        const int k = task_.k;

        const auto parent_col = k_colourable(g, k - 1);

        std::optional<std::pair<int, int>> force;
        std::optional<std::pair<VertexSet, VertexSet>> force_xy;
        if (task_.pruning.comparable_forcing) force = comparable_pair(g);
        if (!force && task_.pruning.lemma3_forcing) force_xy = lemma3_witness(g, task_.lemma3_cap);
        if (force || force_xy) forcing_nodes_.fetch_add(1, std::memory_order_relaxed);

        // Neighbourhood subsets in ascending cardinality; with a forced
        // pair (u,v) only subsets containing u and avoiding v occur.
        VertexSet pool = full_set(n);
        VertexSet always = 0;
        if (force) {
            pool &= ~(vbit(force->first) | vbit(force->second));
            always = vbit(force->first);
        }
        const int pool_size = set_size(pool);
        std::vector<int> pool_vertices;
        pool_vertices.reserve(pool_size);
        for (int v : VertexRange(pool)) pool_vertices.push_back(v);

        std::uint64_t since_check = 0;
        for (int card = 0; card <= pool_size; ++card) {
            VertexSet pick = card == 0 ? 0 : full_set(card);
            for (;;) {
                VertexSet nbrs = always;
                for (int b : VertexRange(pick)) nbrs |= vbit(pool_vertices[b]);
                if (!force_xy || ((nbrs & force_xy->first) != 0 && (force_xy->second & ~nbrs) != 0))
                    handle_child(g, nbrs, parent_col);
                if (((++since_check) & 1023) == 0 && budget_exceeded()) return false;
                if (card == 0) break;
                pick = next_same_size(pick, pool_size);
                if (!pick) break;
            }
        }
        return true;
    }

    void handle_child(const Graph& g, VertexSet nbrs, const std::optional<Colouring>& parent_col) {
        const int n = g.order();
        const int k = task_.k;
        children_.fetch_add(1, std::memory_order_relaxed);
        const Graph child = add_vertex(g, nbrs);

        if (task_.pruning.family_free && !is_family_free_incremental(child, task_.family, n)) {
            pr_family_.fetch_add(1, std::memory_order_relaxed);
            return;
        }

        // (k-1)-colourability, trying to extend the parent's colouring first.
        bool colourable;
        if (parent_col) {
            VertexSet used = 0;
            for (int v : VertexRange(nbrs)) used |= VertexSet{1} << parent_col->colour[v];
            colourable = used != full_set(k - 1) || static_cast<bool>(k_colourable(child, k - 1));
        } else {
            colourable = static_cast<bool>(k_colourable(child, k - 1));
        }

        if (!colourable && task_.pruning.colour_bound) {
            out_cand_.fetch_add(1, std::memory_order_relaxed);
            if (output_test(child))
                add_output(canonical_form(child));
            else
                pr_colour_.fetch_add(1, std::memory_order_relaxed);
            return;  // not k-colourable minus nothing: never extended
        }
        if (!colourable && !task_.pruning.colour_bound) {
            out_cand_.fetch_add(1, std::memory_order_relaxed);
            if (output_test(child)) add_output(canonical_form(child));
        }

        if (task_.max_order && child.order() >= *task_.max_order) return;
        if (child.order() >= kMaxOrder) {
            mark_over_budget();  // cannot extend further; exhaustiveness lost
            return;
        }

        const Graph canon = canonical_relabel(child);
        const std::string form = encode_graph6(canon);
        if (task_.pruning.iso_dedup) {
            if (!seen_.insert(form)) {
                iso_rej_.fetch_add(1, std::memory_order_relaxed);
                return;
            }
        }
        push_frontier(form);
    }

    bool output_test(const Graph& g) {
        // Family-freeness is already ensured when P1 is on.
        if (!task_.pruning.family_free && !is_family_free(g, task_.family)) return false;
        if (k_colourable(g, task_.k - 1)) return false;
        for (int v = 0; v < g.order(); ++v)
            if (!k_colourable(delete_vertex(g, v), task_.k - 1)) return false;
        return true;
    }

    void add_output(const std::string& form) {
        std::lock_guard<std::mutex> lock(output_mutex_);
        outputs_.insert(form);
    }

    void push_frontier(const std::string& form) {
        std::lock_guard<std::mutex> lock(mutex_);
        frontier_.push_back(form);
        cv_.notify_one();
    }

    void mark_over_budget() {
        std::lock_guard<std::mutex> lock(mutex_);
        over_budget_ = true;
        cv_.notify_all();
    }

    SearchStats snapshot_stats() {
        SearchStats s;
        s.nodes_expanded = nodes_.load();
        s.children_generated = children_.load();
        s.iso_rejections = iso_rej_.load();
        s.prune_family = pr_family_.load();
        s.prune_colour_discard = pr_colour_.load();
        s.output_candidates = out_cand_.load();
        s.forcing_nodes = forcing_nodes_.load();
        s.outputs = outputs_.size();
        s.wall_seconds = elapsed();
        s.exhaustive = !over_budget_;
        s.max_order = task_.max_order;
        return s;
    }

    void maybe_checkpoint() {
        if (task_.checkpoint_path.empty()) return;
        std::uint64_t due = checkpoint_due_.load(std::memory_order_relaxed);
        if (nodes_.load(std::memory_order_relaxed) < due + task_.checkpoint_interval) return;
        if (!checkpoint_due_.compare_exchange_strong(due, nodes_.load(std::memory_order_relaxed))) return;
        write_checkpoint(task_.checkpoint_path);
    }

    // Versioned checkpoint: pending frontier (including nodes being
    // processed when the snapshot was taken, which are simply reprocessed
    // on resume), outputs so far, and a digest of the seen store for
    // sanity. Not stable across releases.
    void write_checkpoint(const std::string& path) {
        std::vector<std::string> pending, outs;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            pending = frontier_;
            pending.insert(pending.end(), in_flight_.begin(), in_flight_.end());
        }
        {
            std::lock_guard<std::mutex> lock(output_mutex_);
            outs.assign(outputs_.begin(), outputs_.end());
        }
        const std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << "critgen-checkpoint 1\n";
            out << "task " << task_digest(task_) << '\n';
            out << "seen-digest " << seen_.digest() << ' ' << seen_.size() << '\n';
            out << "nodes " << nodes_.load() << '\n';
            out << "outputs " << outs.size() << '\n';
            for (const auto& o : outs) out << o << '\n';
            out << "frontier " << pending.size() << '\n';
            for (const auto& f : pending) out << f << '\n';
            out << "end\n";
        }
        std::rename(tmp.c_str(), path.c_str());
    }

    void load_checkpoint(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("resume: cannot open " + path);
        std::string word;
        std::uint64_t value;
        in >> word >> value;
        if (word != "critgen-checkpoint" || value != 1) throw std::invalid_argument("resume: bad header");
        in >> word >> value;
        if (word != "task" || value != task_digest(task_)) throw std::invalid_argument("resume: task mismatch");
        std::uint64_t seen_digest, seen_count;
        in >> word >> seen_digest >> seen_count;
        in >> word >> value;
        nodes_.store(value);
        std::size_t count;
        in >> word >> count;
        for (std::size_t i = 0; i < count; ++i) {
            std::string form;
            in >> form;
            outputs_.insert(form);
            seen_.insert(form);
        }
        in >> word >> count;
        for (std::size_t i = 0; i < count; ++i) {
            std::string form;
            in >> form;
            frontier_.push_back(form);
            seen_.insert(form);
        }
    }
};

}  // namespace detail

inline GenerationResult generate(const GenerationTask& task) { return detail::Generator(task).run(); }

// One-node expansion as a standalone operation: all one-vertex extensions
// of g surviving the enabled rules, deduplicated by canonical form within
// the call. Children that are not (k-1)-colourable are output candidates
// and appear here too (the full search output-tests instead of recursing).
inline std::vector<Graph> extend_children(const Graph& g, const GenerationTask& task) {
    if (!is_family_free(g, task.family)) return {};
    std::optional<std::pair<int, int>> force;
    std::optional<std::pair<VertexSet, VertexSet>> force_xy;
    if (task.pruning.comparable_forcing) force = comparable_pair(g);
    if (!force && task.pruning.lemma3_forcing) force_xy = lemma3_witness(g, task.lemma3_cap);

    std::set<std::string> seen;
    std::vector<Graph> out;
    const int n = g.order();
    for (VertexSet nbrs = 0;; ++nbrs) {
        if (force && ((nbrs & vbit(force->first)) == 0 || (nbrs & vbit(force->second)) != 0)) {
        } else if (force_xy && ((nbrs & force_xy->first) == 0 || (force_xy->second & ~nbrs) == 0)) {
        } else {
            const Graph child = add_vertex(g, nbrs);
            if (!task.pruning.family_free || is_family_free_incremental(child, task.family, n)) {
                if (seen.insert(canonical_form(child)).second) out.push_back(child);
            }
        }
        if (nbrs == full_set(n)) break;
    }
    return out;
}

// Independent oracle: isomorph-free enumeration of ALL graphs up to
// n_max by one-vertex extensions with canonical-form dedup, then plain
// definitional filtering. Shares no pruning logic with the search above.
inline std::vector<Graph> oracle_enumerate(int k, const PatternFamily& family, int n_max) {
    if (n_max > 10) throw std::invalid_argument("oracle_enumerate: n_max above guard (10)");
    std::vector<Graph> found;
    if (n_max < 1) return found;
    std::vector<std::string> level = {canonical_form(Graph(1))};
    for (int n = 1; n <= n_max; ++n) {
        std::set<std::string> next;
        for (const std::string& form : level) {
            const Graph g = decode_graph6(form);
            if (is_family_free(g, family) && is_vertex_critical_quick(g, k)) found.push_back(g);
            if (n == n_max) continue;
            for (VertexSet nbrs = 0; nbrs <= full_set(n); ++nbrs) {
                next.insert(canonical_form(add_vertex(g, nbrs)));
                if (nbrs == full_set(n)) break;
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(found.begin(), found.end(),
              [](const Graph& a, const Graph& b) { return canonical_form(a) < canonical_form(b); });
    return found;
}

// Unlabelled-graph counts per order 1..n_max, used to pin the enumerator
// and the canonical form against known constants.
inline std::vector<std::size_t> unlabelled_graph_counts(int n_max) {
    if (n_max > 10) throw std::invalid_argument("unlabelled_graph_counts: n_max above guard (10)");
    std::vector<std::size_t> counts;
    if (n_max < 1) return counts;
    std::vector<std::string> level = {canonical_form(Graph(1))};
    counts.push_back(1);
    for (int n = 1; n < n_max; ++n) {
        std::set<std::string> next;
        for (const std::string& form : level) {
            const Graph g = decode_graph6(form);
            for (VertexSet nbrs = 0; nbrs <= full_set(n); ++nbrs) {
                next.insert(canonical_form(add_vertex(g, nbrs)));
                if (nbrs == full_set(n)) break;
            }
        }
        level.assign(next.begin(), next.end());
        counts.push_back(level.size());
    }
    return counts;
}

}  // namespace critgraph
