#pragma once

// Machine audit of the structural facts that hold around an induced C5 in
// a 5-vertex-critical (P6,bull)-free graph. Each claim is an exactly
// stated predicate over the ring decomposition. Claims are split in two
// classes:
//   unconditional - proved for every such graph; a violation on one is a
//                   real finding (or a bad input);
//   assume        - proved only up to finitely many exceptional graphs
//                   (or under ambient assumptions such as K5-freeness or
//                   the absence of a homogeneous C5); a violation is
//                   reported, not an error.
// Vacuously true claims report holds. `not-applicable` appears only when
// a predicate cannot be evaluated under its cost guard.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critgraph/structure.hpp"

namespace critgraph {

enum class ClaimClass { unconditional, assume };
enum class ClaimStatus { holds, violated, assume_violated, not_applicable };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::violated: return "violated";
        case ClaimStatus::assume_violated: return "assume-class";
        default: return "not-applicable";
    }
}

struct ClaimResult {
    int id = 0;
    std::string name;
    ClaimClass cls = ClaimClass::unconditional;
    ClaimStatus status = ClaimStatus::holds;
    std::vector<int> witness;
};

using ClaimReport = std::vector<ClaimResult>;

namespace claims_detail {

using Witness = std::optional<std::vector<int>>;

inline int m5(int i) { return ((i % 5) + 5) % 5; }

inline std::vector<int> vec(VertexSet s) {
    std::vector<int> out;
    for (int v : VertexRange(s)) out.push_back(v);
    return out;
}

inline std::vector<int> vec2(int a, int b) { return {a, b}; }

// First nonadjacent cross pair, as a completeness violation witness.
inline Witness complete_w(const Graph& g, VertexSet a, VertexSet b) {
    for (int u : VertexRange(a)) {
        const VertexSet missing = b & ~g.neighbours(u);
        if (missing) return vec2(u, first_vertex(missing));
    }
    return std::nullopt;
}

inline Witness anticomplete_w(const Graph& g, VertexSet a, VertexSet b) {
    for (int u : VertexRange(a)) {
        const VertexSet hit = b & g.neighbours(u);
        if (hit) return vec2(u, first_vertex(hit));
    }
    return std::nullopt;
}

inline Witness pure_w(const Graph& g, VertexSet a, VertexSet b) {
    if (!a || !b) return std::nullopt;
    auto e = anticomplete_w(g, a, b);
    auto ne = complete_w(g, a, b);
    if (e && ne) {
        std::vector<int> w = *e;
        w.push_back((*ne)[0]);
        w.push_back((*ne)[1]);
        return w;
    }
    return std::nullopt;
}

inline Witness homogeneous_w(const Graph& g, VertexSet s) {
    for (int v : VertexRange(g.vertices() & ~s)) {
        const VertexSet hit = g.neighbours(v) & s;
        if (hit != 0 && hit != s) {
            std::vector<int> w = vec(s);
            w.push_back(v);
            return w;
        }
    }
    return std::nullopt;
}

inline Witness clique_le_w(const Graph& g, VertexSet s, int cap) {
    if (set_size(s) > cap) return vec(s);
    for (int u : VertexRange(s)) {
        const VertexSet missing = s & ~(g.neighbours(u) | vbit(u));
        if (missing) return vec2(u, first_vertex(missing));
    }
    return std::nullopt;
}

struct AuditContext {
    const Graph& g;
    C5Decomposition d;
    std::array<std::vector<VertexSet>, 5> comps_s1, comps_s2;
    std::vector<VertexSet> comps_s0;
    VertexSet s1a = 0, s2a = 0, s3a = 0, s4a = 0;
    bool homo_guard_ok = true;
    std::vector<VertexSet> maximal_homo;
    bool f2_free = true, f3_free = true, f4_free = true, f5_free = true, f6_free = true;

    AuditContext(const Graph& graph, const std::array<int, 5>& ring) : g(graph), d(c5_partition(graph, ring)) {
        for (int i = 0; i < 5; ++i) {
            comps_s1[i] = components(g, d.s1[i]);
            comps_s2[i] = components(g, d.s2[i]);
        }
        comps_s0 = components(g, d.s0);
        s1a = d.s1_all();
        s2a = d.s2_all();
        s3a = d.s3_all();
        s4a = d.s4_all();
        if (g.order() <= 22) {
            maximal_homo = maximal_homogeneous_sets(g);
        } else {
            homo_guard_ok = false;
        }
        f2_free = !find_induced(g, f2_graph());
        f3_free = !find_induced(g, f3_graph());
        f4_free = !find_induced(g, f4_graph());
        f5_free = !find_induced(g, f5_graph());
        f6_free = !find_induced(g, f6_graph());
    }
};

}  // namespace claims_detail

struct ClaimSpec {
    int id;
    std::string name;
    ClaimClass cls;
    std::function<claims_detail::Witness(const claims_detail::AuditContext&)> check;
    bool needs_homo_guard = false;
};

inline const std::vector<ClaimSpec>& claim_registry() {
    using namespace claims_detail;
    using Ctx = const AuditContext&;
    static const std::vector<ClaimSpec> registry = [] {
        std::vector<ClaimSpec> r;
        auto add = [&r](int id, const char* name, ClaimClass cls, std::function<Witness(Ctx)> fn,
                        bool guard = false) {
            r.push_back(ClaimSpec{id, name, cls, std::move(fn), guard});
        };

        add(1, "homogeneous-sets-are-small-cliques", ClaimClass::assume, [](Ctx c) -> Witness {
            for (VertexSet s : c.maximal_homo)
                if (auto w = clique_le_w(c.g, s, 3)) return vec(s);
            return std::nullopt;
        }, /*guard=*/true);

        add(2, "ring-pattern-closure", ClaimClass::unconditional, [](Ctx c) -> Witness {
            if (c.d.unclassified) return vec(c.d.unclassified);
            return std::nullopt;
        });

        add(3, "s0-anticomplete-s1-s3-s4", ClaimClass::unconditional, [](Ctx c) -> Witness {
            return anticomplete_w(c.g, c.d.s0, c.s1a | c.s3a | c.s4a);
        });

        add(4, "s0-s2-component-purity", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (const VertexSet a : c.comps_s0)
                for (int i = 0; i < 5; ++i)
                    for (const VertexSet b : c.comps_s2[i])
                        if (auto w = pure_w(c.g, a, b)) return w;
            return std::nullopt;
        });

        add(5, "s5-stable", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int u : VertexRange(c.d.s5)) {
                const VertexSet hit = c.g.neighbours(u) & c.d.s5 & ~(vbit(u) | (vbit(u) - 1));
                if (hit) return vec2(u, first_vertex(hit));
            }
            return std::nullopt;
        });

        add(6, "s5-complete-s1-s2", ClaimClass::unconditional, [](Ctx c) -> Witness {
            return complete_w(c.g, c.d.s5, c.s1a | c.s2a);
        });

        add(7, "s1-s1-relations", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                if (auto w = complete_w(c.g, c.d.s1[i], c.d.s1[m5(i + 2)] | c.d.s1[m5(i + 3)])) return w;
                if (auto w = anticomplete_w(c.g, c.d.s1[i], c.d.s1[m5(i + 1)] | c.d.s1[m5(i + 4)])) return w;
            }
            return std::nullopt;
        });

        add(8, "s1-s2-same-component-purity", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (const VertexSet a : c.comps_s1[i])
                    for (const VertexSet b : c.comps_s2[i])
                        if (auto w = pure_w(c.g, a, b)) return w;
            return std::nullopt;
        });

        add(9, "s1-s2-adjacent-anticomplete", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = anticomplete_w(c.g, c.d.s1[i], c.d.s2[m5(i + 1)] | c.d.s2[m5(i + 4)])) return w;
            return std::nullopt;
        });

        add(10, "s1-s2-opposite-purity", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (int off : {2, 3})
                    for (const VertexSet b : c.comps_s2[m5(i + off)])
                        if (auto w = pure_w(c.g, c.d.s1[i], b)) return w;
            return std::nullopt;
        });

        add(11, "s1-s3-relations", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                if (auto w = complete_w(c.g, c.d.s1[i], c.d.s3[i])) return w;
                if (auto w = anticomplete_w(c.g, c.d.s1[i], c.s3a & ~c.d.s3[i])) return w;
            }
            return std::nullopt;
        });

        add(12, "s1-nonempty-forces-s4", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet other = c.s4a & ~c.d.s4[i];
                if (c.d.s1[i] && other) return vec2(first_vertex(c.d.s1[i]), first_vertex(other));
            }
            return std::nullopt;
        });

        add(13, "s1-s4-same-anticomplete", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = anticomplete_w(c.g, c.d.s1[i], c.d.s4[i])) return w;
            return std::nullopt;
        });

        add(14, "s1-components-homogeneous", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (const VertexSet comp : c.comps_s1[i])
                    if (auto w = homogeneous_w(c.g, comp)) return w;
            return std::nullopt;
        });

        add(15, "s1-splitter-lies-in-s2", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                if (c.comps_s1[i].size() < 2) continue;
                for (int v : VertexRange(c.g.vertices() & ~c.d.s1[i] & ~c.d.s2[i])) {
                    int adj_comp = -1, nonadj_comp = -1;
                    for (std::size_t j = 0; j < c.comps_s1[i].size(); ++j) {
                        if (c.g.neighbours(v) & c.comps_s1[i][j]) adj_comp = static_cast<int>(j);
                        if (c.comps_s1[i][j] & ~c.g.neighbours(v)) nonadj_comp = static_cast<int>(j);
                    }
                    if (adj_comp >= 0 && nonadj_comp >= 0 && adj_comp != nonadj_comp) {
                        return std::vector<int>{v, first_vertex(c.g.neighbours(v) & c.comps_s1[i][adj_comp]),
                                                first_vertex(c.comps_s1[i][nonadj_comp] & ~c.g.neighbours(v))};
                    }
                }
            }
            return std::nullopt;
        });

        add(16, "s2-s2-adjacent-component-purity", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (const VertexSet a : c.comps_s2[i])
                    for (const VertexSet b : c.comps_s2[m5(i + 1)])
                        if (auto w = pure_w(c.g, a, b)) return w;
            return std::nullopt;
        });

        add(17, "s2-s2-opposite-anticomplete", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = anticomplete_w(c.g, c.d.s2[i], c.d.s2[m5(i + 2)])) return w;
            return std::nullopt;
        });

        add(18, "s2-s3-relations", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                if (auto w = complete_w(c.g, c.d.s2[i], c.d.s3[m5(i + 1)] | c.d.s3[m5(i + 4)])) return w;
                if (auto w = anticomplete_w(c.g, c.d.s2[i], c.d.s3[m5(i + 2)] | c.d.s3[m5(i + 3)])) return w;
            }
            return std::nullopt;
        });

        add(19, "s2-complete-s4-others", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = complete_w(c.g, c.d.s2[i], c.s4a & ~c.d.s4[i])) return w;
            return std::nullopt;
        });

        add(20, "s2-s4-anticomplete", ClaimClass::unconditional, [](Ctx c) -> Witness {
            return anticomplete_w(c.g, c.s2a, c.s4a);
        });

        add(21, "s2-nonempty-forces-s4", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet other = c.s4a & ~c.d.s4[i];
                if (c.d.s2[i] && other) return vec2(first_vertex(c.d.s2[i]), first_vertex(other));
            }
            return std::nullopt;
        });

        add(22, "s2-isolated-components-homogeneous", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (const VertexSet comp : c.comps_s2[i]) {
                    if (!anticomplete_between(c.g, comp, c.d.s3[i])) continue;
                    if (auto w = homogeneous_w(c.g, comp)) return w;
                }
            return std::nullopt;
        });

        add(23, "s3-s3-adjacent-complete", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = complete_w(c.g, c.d.s3[i], c.d.s3[m5(i + 1)])) return w;
            return std::nullopt;
        });

        add(24, "s4-clique", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = clique_le_w(c.g, c.d.s4[i], kMaxOrder)) return w;
            return std::nullopt;
        });

        add(25, "s4-size-le-2", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (set_size(c.d.s4[i]) > 2) return vec(c.d.s4[i]);
            return std::nullopt;
        });

        add(26, "s5-with-s0-neighbour-complete-s3-s4", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int v : VertexRange(c.d.s5)) {
                if (!(c.g.neighbours(v) & c.d.s0)) continue;
                const VertexSet missing = (c.s3a | c.s4a) & ~c.g.neighbours(v);
                if (missing) return vec2(v, first_vertex(missing));
            }
            return std::nullopt;
        });

        add(27, "s0-with-s2-neighbour-complete-s5", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int v : VertexRange(c.d.s0)) {
                if (!(c.g.neighbours(v) & c.s2a)) continue;
                const VertexSet missing = c.d.s5 & ~c.g.neighbours(v);
                if (missing) return vec2(v, first_vertex(missing));
            }
            return std::nullopt;
        });

        add(28, "s5-or-s0-empty", ClaimClass::assume, [](Ctx c) -> Witness {
            if (c.d.s5 && c.d.s0) return vec2(first_vertex(c.d.s5), first_vertex(c.d.s0));
            return std::nullopt;
        });

        add(29, "wheel-free-and-s5-empty", ClaimClass::assume, [](Ctx c) -> Witness {
            if (!c.f2_free) return std::vector<int>{};
            if (c.d.s5) return vec(c.d.s5);
            return std::nullopt;
        });

        add(30, "s0-components-homogeneous", ClaimClass::assume, [](Ctx c) -> Witness {
            for (const VertexSet comp : c.comps_s0)
                if (auto w = homogeneous_w(c.g, comp)) return w;
            return std::nullopt;
        });

        add(31, "s2-missing-s1-anticomplete-s3", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (int v : VertexRange(c.d.s2[i])) {
                    if (!(c.d.s1[i] & ~c.g.neighbours(v))) continue;
                    const VertexSet hit = c.g.neighbours(v) & c.d.s3[i];
                    if (hit) return vec2(v, first_vertex(hit));
                }
            return std::nullopt;
        });

        add(32, "s2-meeting-s0-anticomplete-s3", ClaimClass::unconditional, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                for (int v : VertexRange(c.d.s2[i])) {
                    if (!(c.g.neighbours(v) & c.d.s0)) continue;
                    const VertexSet hit = c.g.neighbours(v) & c.d.s3[i];
                    if (hit) return vec2(v, first_vertex(hit));
                }
            return std::nullopt;
        });

        add(33, "side-a-multi-component-small-cliques", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const auto comps_a = components(c.g, c.d.side_a(i));
                if (comps_a.size() < 2) continue;
                for (const VertexSet comp : comps_a) {
                    if (auto w = homogeneous_w(c.g, comp)) return w;
                    if (auto w = clique_le_w(c.g, comp, 3)) return w;
                }
            }
            return std::nullopt;
        });

        add(34, "side-a-single-component-clique", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet a = c.d.side_a(i);
                if (components(c.g, a).size() != 1) continue;
                if (auto w = clique_le_w(c.g, a, 3)) return w;
            }
            return std::nullopt;
        });

        add(35, "s2-s3-same-anticomplete", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = anticomplete_w(c.g, c.d.s2[i], c.d.s3[i])) return w;
            return std::nullopt;
        });

        add(36, "s3-clique-le-2", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = clique_le_w(c.g, c.d.s3[i], 2)) return w;
            return std::nullopt;
        });

        add(37, "side-b-components-and-small-cliques", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet b = c.d.side_b(i);
                for (const VertexSet comp : components(c.g, b)) {
                    const bool within = (comp & ~c.d.s1[i]) == 0 || (comp & ~c.d.s0) == 0;
                    if (!within) return vec(comp);
                }
                const auto comps_a = components(c.g, c.d.side_a(i));
                if (comps_a.size() < 2) continue;
                for (const VertexSet comp : comps_a) {
                    if (auto w = homogeneous_w(c.g, comp)) return w;
                    if (auto w = clique_le_w(c.g, comp, 3)) return w;
                }
                for (const VertexSet comp : components(c.g, b)) {
                    if (auto w = homogeneous_w(c.g, comp)) return w;
                    if (auto w = clique_le_w(c.g, comp, 3)) return w;
                }
            }
            return std::nullopt;
        });

        add(38, "side-ab-outside-purity", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet a = c.d.side_a(i), b = c.d.side_b(i);
                if (components(c.g, a).size() < 2) continue;
                for (const VertexSet w : components(c.g, a | b)) {
                    const VertexSet x = w & a, y = w & b;
                    for (int v : VertexRange(c.g.vertices() & ~w)) {
                        if (auto wit = pure_w(c.g, vbit(v), x)) return wit;
                        if (auto wit = pure_w(c.g, vbit(v), y)) return wit;
                    }
                }
            }
            return std::nullopt;
        });

        add(39, "side-ab-connected-parts", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                const VertexSet a = c.d.side_a(i), b = c.d.side_b(i);
                if (components(c.g, a).size() < 2) continue;
                for (const VertexSet w : components(c.g, a | b)) {
                    if (components(c.g, w & a).size() > 1) return vec(w & a);
                    if (components(c.g, w & b).size() > 1) return vec(w & b);
                }
            }
            return std::nullopt;
        });

        add(40, "side-a-single-s1-clique", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i) {
                if (components(c.g, c.d.side_a(i)).size() != 1) continue;
                if (auto w = clique_le_w(c.g, c.d.s1[i], 3)) return w;
            }
            return std::nullopt;
        });

        add(41, "s1-s2-same-anticomplete", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = anticomplete_w(c.g, c.d.s1[i], c.d.s2[i])) return w;
            return std::nullopt;
        });

        add(42, "s1-clique-le-3", ClaimClass::assume, [](Ctx c) -> Witness {
            for (int i = 0; i < 5; ++i)
                if (auto w = clique_le_w(c.g, c.d.s1[i], 3)) return w;
            return std::nullopt;
        });

        add(43, "no-f3-f4-f5", ClaimClass::assume, [](Ctx c) -> Witness {
            if (!c.f3_free || !c.f4_free || !c.f5_free) return std::vector<int>{};
            return std::nullopt;
        });

        add(44, "no-f6", ClaimClass::assume, [](Ctx c) -> Witness {
            if (!c.f6_free) return std::vector<int>{};
            return std::nullopt;
        });

        return r;
    }();
    return registry;
}

inline ClaimReport audit_claims(const Graph& g, const std::array<int, 5>& ring) {
    claims_detail::AuditContext ctx(g, ring);
    ClaimReport report;
    for (const ClaimSpec& spec : claim_registry()) {
        ClaimResult res;
        res.id = spec.id;
        res.name = spec.name;
        res.cls = spec.cls;
        if (spec.needs_homo_guard && !ctx.homo_guard_ok) {
            res.status = ClaimStatus::not_applicable;
        } else if (auto w = spec.check(ctx)) {
            res.status = spec.cls == ClaimClass::assume ? ClaimStatus::assume_violated : ClaimStatus::violated;
            res.witness = *w;
        }
        report.push_back(res);
    }
    return report;
}

// claimNN<TAB>status<TAB>witness-vertices
inline std::string format_claim_report(const ClaimReport& report) {
    std::ostringstream out;
    for (const ClaimResult& r : report) {
        out << "claim" << (r.id < 10 ? "0" : "") << r.id << '\t' << to_string(r.status) << '\t';
        if (r.witness.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < r.witness.size(); ++i) {
                if (i) out << ' ';
                out << r.witness[i];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace critgraph
