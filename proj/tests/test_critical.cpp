#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "critgraph/critical.hpp"
#include "critgraph/named.hpp"

using namespace critgraph;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Criticality straight from the definition, over every proper induced
// subgraph rather than only single deletions.
bool naive_critical(const Graph& g, int k) {
    if (g.order() == 0 || chromatic_number(g) != k) return false;
    for (VertexSet s = 0; s < full_set(g.order()); ++s)
        if (chromatic_number(induced_subgraph(g, s)) >= k) return false;
    return true;
}

// All (X, Y) pairs satisfying the three bullets, sizes capped when cap > 0.
bool naive_lemma3_pair_exists(const Graph& g, int cap) {
    const int n = g.order();
    const VertexSet all = full_set(n);
    for (VertexSet x = 1; x && x <= all; ++x) {
        if (cap > 0 && set_size(x) > cap) continue;
        for (VertexSet y = 1; y && y <= all; ++y) {
            if ((x & y) || (cap > 0 && set_size(y) > cap)) continue;
            if (!anticomplete_between(g, x, y)) continue;
            if (chromatic_number(induced_subgraph(g, x)) > chromatic_number(induced_subgraph(g, y))) continue;
            if (!complete_between(g, set_neighbourhood(g, x), y)) continue;
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("vertex criticality on the named instances") {
    CHECK(is_k_vertex_critical(complete_graph(5), 5).is_critical);
    CHECK(is_k_vertex_critical(build_named("c5_join_k2"), 5).is_critical);
    CHECK(is_k_vertex_critical(build_named("co_c9"), 5).is_critical);
    CHECK(is_k_vertex_critical(cycle_graph(5), 3).is_critical);
    CHECK(is_k_vertex_critical(complete_graph(1), 1).is_critical);

    SECTION("a path is not 2-critical; an endpoint survives deletion") {
        const auto rep = is_k_vertex_critical(path_graph(6), 2);
        CHECK(!rep.is_critical);
        CHECK(rep.chi == 2);
        REQUIRE(rep.failing_vertex);
        CHECK(*rep.failing_vertex == 0);
    }

    SECTION("disconnected input reports the lemma tag") {
        const auto rep = is_k_vertex_critical(disjoint_union(complete_graph(3), complete_graph(3)), 3, true);
        CHECK(!rep.is_critical);
        REQUIRE(rep.lemma2_violation);
        CHECK(rep.lemma2_violation->kind == Lemma2Violation::Kind::disconnected);
    }

    SECTION("agreement with the all-subsets definition") {
        std::mt19937 rng(1212);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const Graph g = random_graph(rng, n, 0.3 + 0.1 * static_cast<double>(rng() % 5));
            for (int k = 1; k <= 5; ++k) {
                CHECK(is_k_vertex_critical(g, k).is_critical == naive_critical(g, k));
                CHECK(is_vertex_critical_quick(g, k) == naive_critical(g, k));
            }
        }
    }

    SECTION("critical graphs have minimum degree at least k-1") {
        for (const char* name : {"k5", "co_c9", "c5_join_k2"}) {
            const Graph g = build_named(name);
            for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= 4);
        }
    }
}

TEST_CASE("comparable pairs") {
    CHECK(!comparable_pair(complete_graph(5)));
    CHECK(comparable_pair_closed(complete_graph(5)));
    const auto leaves = comparable_pair(star(3));
    REQUIRE(leaves);
    CHECK(*leaves == std::make_pair(1, 2));
    CHECK(!comparable_pair(cycle_graph(5)));

    SECTION("open containment never holds for adjacent pairs") {
        std::mt19937 rng(1313);
        for (int trial = 0; trial < 200; ++trial) {
            const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
            if (auto p = comparable_pair(g)) CHECK(!g.edge(p->first, p->second));
        }
    }
}

TEST_CASE("clique cutsets") {
    const auto mid = clique_cutset(path_graph(3));
    REQUIRE(mid);
    CHECK(*mid == vbit(1));
    CHECK(!clique_cutset(cycle_graph(5)));
    const auto hinge = clique_cutset(build_named("bull"));
    REQUIRE(hinge);
    CHECK(*hinge == (vbit(1) | vbit(2)));
    CHECK(!clique_cutset(complete_graph(8)));
    CHECK_THROWS_AS(clique_cutset(disjoint_union(complete_graph(2), complete_graph(2))),
                    std::invalid_argument);

    SECTION("returned cutsets re-verify") {
        std::mt19937 rng(1414);
        int exercised = 0;
        while (exercised < 100) {
            const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.35);
            if (!is_connected(g)) continue;
            ++exercised;
            if (auto c = clique_cutset(g)) {
                CHECK(is_clique(g, *c));
                CHECK(components(g, g.vertices() & ~*c).size() >= 2);
            }
        }
    }
}

TEST_CASE("lemma3 witnesses") {
    SECTION("P4 has the size-1 witness formed by a comparable pair") {
        const auto w = lemma3_witness(path_graph(4), 1);
        REQUIRE(w);
        CHECK(w->first == vbit(0));
        CHECK(w->second == vbit(2));
    }
    SECTION("star leaves") {
        const auto w = lemma3_witness(star(3), 1);
        REQUIRE(w);
        CHECK(set_size(w->first) == 1);
        CHECK(set_size(w->second) == 1);
    }
    CHECK(!lemma3_witness(complete_graph(5), 2));
    CHECK(!lemma3_witness(cycle_graph(5), 2));

    SECTION("returned witnesses re-verify the three conditions") {
        std::mt19937 rng(1515);
        for (int trial = 0; trial < 200; ++trial) {
            const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.4);
            if (auto w = lemma3_witness(g, 3)) {
                CHECK((w->first & w->second) == 0);
                CHECK(anticomplete_between(g, w->first, w->second));
                CHECK(chromatic_number(induced_subgraph(g, w->first)) <=
                      chromatic_number(induced_subgraph(g, w->second)));
                CHECK(complete_between(g, w->second, set_neighbourhood(g, w->first)));
            }
        }
    }

    SECTION("cap 1 witnesses coincide with comparable pairs") {
        std::mt19937 rng(1616);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.4);
            CHECK(static_cast<bool>(lemma3_witness(g, 1)) == static_cast<bool>(comparable_pair(g)));
        }
    }

    SECTION("full-cap search agrees with exhaustive enumeration on n <= 7") {
        std::mt19937 rng(1717);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const Graph g = random_graph(rng, n, 0.35);
            CHECK(static_cast<bool>(lemma3_witness(g, n)) == naive_lemma3_pair_exists(g, 0));
            CHECK(static_cast<bool>(lemma3_witness(g, 2)) == naive_lemma3_pair_exists(g, 2));
        }
    }
}
