#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "critgraph/colour.hpp"
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

// Exhaustive assignment oracle, independent of the search.
bool oracle_k_colourable(const Graph& g, int k) {
    const int n = g.order();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<int> assign(n, 0);
    for (;;) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v : VertexRange(g.neighbours(u) & ~full_set(u + 1)))
                if (assign[u] == assign[v]) {
                    proper = false;
                    break;
                }
        if (proper) return true;
        int pos = 0;
        while (pos < n && assign[pos] == k - 1) assign[pos++] = 0;
        if (pos == n) return false;
        ++assign[pos];
    }
}

}  // namespace

TEST_CASE("k-colourability on the named instances") {
    CHECK(!k_colourable(cycle_graph(5), 2));
    const auto c3 = k_colourable(cycle_graph(5), 3);
    REQUIRE(c3);
    CHECK(is_proper(cycle_graph(5), *c3));
    CHECK(!k_colourable(build_named("c5_join_k2"), 4));
    CHECK(k_colourable(build_named("c5_join_k2"), 5));
    CHECK(k_colourable(Graph(0), 0));
    CHECK(!k_colourable(Graph(1), 0));
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(path_graph(6)) == 2);
    CHECK(chromatic_number(build_named("co_c9")) == 5);
    CHECK(chromatic_number(build_named("co_c7")) == 4);
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(4)) == 1);
}

TEST_CASE("clique numbers") {
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(build_named("co_c7")) == 3);
    CHECK(clique_number(build_named("c5_join_k2")) == 4);
    const VertexSet w = max_clique(build_named("co_c7"));
    CHECK(set_size(w) == 3);
    CHECK(is_clique(build_named("co_c7"), w));
}

TEST_CASE("colouring invariants against the exhaustive oracle") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, n, 0.15 + 0.1 * static_cast<double>(rng() % 7));
        for (int k = 0; k <= 4; ++k) {
            const auto got = k_colourable(g, k);
            CHECK(static_cast<bool>(got) == oracle_k_colourable(g, k));
            if (got) CHECK(is_proper(g, *got));
        }
        const int chi = chromatic_number(g);
        CHECK(clique_number(g) <= chi);
        if (chi > 0) CHECK(!oracle_k_colourable(g, chi - 1));
        CHECK(oracle_k_colourable(g, chi));
    }
}

TEST_CASE("monotonicity in k") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 9), 0.5);
        for (int k = 1; k < 6; ++k)
            if (k_colourable(g, k)) CHECK(k_colourable(g, k + 1));
    }
}
