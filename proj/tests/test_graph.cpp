#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "critgraph/graph.hpp"
#include "critgraph/graph6.hpp"
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

// Independent of the detect module: a 5-vertex graph is a C5 exactly when
// it is 2-regular and connected.
bool five_set_induces_c5(const Graph& g, VertexSet s) {
    const Graph h = induced_subgraph(g, s);
    if (h.order() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (h.degree(v) != 2) return false;
    return is_connected(h);
}

}  // namespace

TEST_CASE("named graph construction matches the figures") {
    struct Row {
        const char* name;
        int order;
        int edges;
        std::vector<int> degrees;
    };
    const std::vector<Row> table = {
        {"p6", 6, 5, {1, 1, 2, 2, 2, 2}},
        {"bull", 5, 5, {1, 1, 2, 3, 3}},
        {"banner", 5, 5, {1, 2, 2, 2, 3}},
        {"chair", 5, 4, {1, 1, 1, 2, 3}},
        {"d", 7, 11, {2, 3, 3, 3, 3, 3, 5}},
        {"e", 7, 13, {2, 4, 4, 4, 4, 4, 4}},
        {"h1", 7, 12, {2, 3, 3, 3, 4, 4, 5}},
        {"h2", 7, 12, {3, 3, 3, 3, 3, 4, 5}},
        {"h3", 7, 12, {2, 3, 3, 3, 4, 4, 5}},
        {"h4", 7, 12, {2, 3, 3, 3, 4, 4, 5}},
        {"h5", 7, 12, {3, 3, 3, 3, 3, 4, 5}},
        {"f1", 7, 11, {1, 3, 3, 3, 3, 3, 6}},
        {"f2", 6, 10, {3, 3, 3, 3, 3, 5}},
        {"f3", 7, 11, {2, 2, 3, 3, 4, 4, 4}},
        {"f4", 7, 9, {2, 2, 2, 3, 3, 3, 3}},
        {"f5", 7, 7, {1, 1, 2, 2, 2, 2, 4}},
        {"f6", 6, 7, {2, 2, 2, 2, 3, 3}},
        {"co_c7", 7, 14, {4, 4, 4, 4, 4, 4, 4}},
        {"co_c9", 9, 27, {6, 6, 6, 6, 6, 6, 6, 6, 6}},
        {"c5_join_k2", 7, 16, {4, 4, 4, 4, 4, 6, 6}},
        {"w5", 6, 10, {3, 3, 3, 3, 3, 5}},
        {"k1", 1, 0, {0}},
    };
    for (const Row& row : table) {
        INFO(row.name);
        const Graph g = build_named(row.name);
        CHECK(g.order() == row.order);
        CHECK(g.edge_count() == row.edges);
        CHECK(degree_sequence(g) == row.degrees);
    }
}

TEST_CASE("named graph cross checks from the construction text") {
    SECTION("bull edges") {
        const Graph b = build_named("bull");
        CHECK(b.edge(0, 1));
        CHECK(b.edge(1, 2));
        CHECK(b.edge(2, 3));
        CHECK(b.edge(1, 4));
        CHECK(b.edge(2, 4));
    }
    SECTION("d is the ring with one lone-attachment and one four-attachment vertex, joined") {
        const Graph d = build_named("d");
        CHECK((d.neighbours(5) & full_set(5)) == vbit(0));
        CHECK((d.neighbours(6) & full_set(5)) == (full_set(5) & ~vbit(0)));
        CHECK(d.edge(5, 6));
    }
    SECTION("e carries two nonadjacent four-attachment vertices") {
        const Graph e = build_named("e");
        CHECK((e.neighbours(5) & full_set(5)) == (full_set(5) & ~vbit(0)));
        CHECK((e.neighbours(6) & full_set(5)) == (full_set(5) & ~vbit(0)));
        CHECK(!e.edge(5, 6));
    }
    SECTION("w5 equals the ring joined with one vertex, and f2") {
        CHECK(join(cycle_graph(5), complete_graph(1)) == build_named("w5"));
        CHECK(build_named("f2") == build_named("w5"));
    }
    SECTION("unknown names and bad parameters are rejected") {
        CHECK_THROWS_AS(build_named("frob"), std::invalid_argument);
        CHECK_THROWS_AS(build_named("k0"), std::invalid_argument);
        CHECK_THROWS_AS(build_named("c2"), std::invalid_argument);
        CHECK_THROWS_AS(build_named("p"), std::invalid_argument);
        CHECK_THROWS_AS(build_named("k99"), std::invalid_argument);
    }
}

TEST_CASE("complement") {
    const Graph k5c = complement(complete_graph(5));
    CHECK(k5c.edge_count() == 0);
    const Graph c5c = complement(cycle_graph(5));
    CHECK(c5c.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    CHECK(is_connected(c5c));
    CHECK(complement(cycle_graph(7)) == build_named("co_c7"));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 16), 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs and components") {
    CHECK(induced_subgraph(cycle_graph(5), vbit(0) | vbit(1) | vbit(2)) == path_graph(3));
    CHECK(induced_subgraph(complete_graph(5), vbit(1) | vbit(3) | vbit(4)) == complete_graph(3));

    SECTION("no 5-subset of co_c7 induces a C5") {
        const Graph g = build_named("co_c7");
        int checked = 0;
        for (VertexSet s = 0; s <= full_set(7); ++s) {
            if (set_size(s) != 5) continue;
            ++checked;
            CHECK(!five_set_induces_c5(g, s));
        }
        CHECK(checked == 21);
    }

    CHECK(components(cycle_graph(5)).size() == 1);
    CHECK(components(complement(complete_graph(5))).size() == 5);
    SECTION("bull horns are nonadjacent") {
        const auto comps = components(build_named("bull"), vbit(0) | vbit(3));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == vbit(0));
        CHECK(comps[1] == vbit(3));
    }
    SECTION("components partition the vertex set") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.15);
            VertexSet seen = 0;
            for (VertexSet comp : components(g)) {
                CHECK((seen & comp) == 0);
                seen |= comp;
            }
            CHECK(seen == g.vertices());
        }
    }
}

TEST_CASE("join") {
    const Graph j = join(cycle_graph(5), complete_graph(2));
    CHECK(j.order() == 7);
    CHECK(j.edge_count() == 16);
    CHECK(j == build_named("c5_join_k2"));
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    CHECK_THROWS_AS(join(complete_graph(40), complete_graph(30)), std::invalid_argument);
}

TEST_CASE("graph6 encoding is bit exact") {
    CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(decode_graph6("Dhc") == cycle_graph(5));

    SECTION("round trip, including the extended header orders") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 20);
            const Graph g = random_graph(rng, n, 0.3);
            CHECK(decode_graph6(encode_graph6(g)) == g);
        }
        for (int n : {62, 63, 64}) {
            const Graph g = random_graph(rng, n, 0.2);
            const std::string s = encode_graph6(g);
            if (n > 62) CHECK(s[0] == '~');
            CHECK(decode_graph6(s) == g);
        }
    }

    SECTION("malformed lines are rejected") {
        CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
        CHECK_THROWS_AS(decode_graph6("Dhc "), std::invalid_argument);
        CHECK_THROWS_AS(decode_graph6("Dh"), std::invalid_argument);
        CHECK_THROWS_AS(decode_graph6("D\x01hc"), std::invalid_argument);
        CHECK_THROWS_AS(decode_graph6("Dhd"), std::invalid_argument);  // nonzero padding
        CHECK_THROWS_AS(decode_graph6("~~???"), std::invalid_argument);
    }
}

TEST_CASE("set relation helpers") {
    const Graph g = build_named("c5_join_k2");
    const VertexSet rim = full_set(5), hubs = vbit(5) | vbit(6);
    CHECK(complete_between(g, hubs, rim));
    CHECK(!anticomplete_between(g, hubs, rim));
    CHECK(pure_between(g, hubs, rim));
    CHECK(is_clique(g, hubs));
    CHECK(!is_clique(g, rim));
    CHECK(is_stable_set(g, vbit(0) | vbit(2)));
    CHECK(set_neighbourhood(g, rim) == hubs);
}
