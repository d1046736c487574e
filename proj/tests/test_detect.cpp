#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "critgraph/colour.hpp"
#include "critgraph/detect.hpp"
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

// Naive ground truth: some |P|-subset of the host induces the pattern,
// checked by brute force over subsets and bijections.
bool naive_contains_induced(const Graph& host, const Graph& pat) {
    const int hn = host.order(), pn = pat.order();
    if (pn > hn) return false;
    std::vector<int> subset;
    for (VertexSet s = 0; s <= full_set(hn); ++s) {
        if (set_size(s) != pn) {
            if (s == full_set(hn)) break;
            continue;
        }
        subset.clear();
        for (int v : VertexRange(s)) subset.push_back(v);
        std::vector<int> perm(pn);
        for (int i = 0; i < pn; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (int i = 0; i < pn && ok; ++i)
                for (int j = i + 1; j < pn && ok; ++j)
                    if (pat.edge(i, j) != host.edge(subset[perm[i]], subset[perm[j]])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (s == full_set(hn)) break;
    }
    return false;
}

bool naive_chi_equals_omega_everywhere(const Graph& g) {
    for (VertexSet s = 1; s <= full_set(g.order()); ++s) {
        const Graph h = induced_subgraph(g, s);
        if (chromatic_number(h) != clique_number(h)) return false;
        if (s == full_set(g.order())) break;
    }
    return true;
}

}  // namespace

TEST_CASE("find_induced on the named instances") {
    SECTION("the path across the bull") {
        const auto e = find_induced(build_named("bull"), path_graph(4));
        REQUIRE(e);
        CHECK(verify_embedding(build_named("bull"), path_graph(4), *e));
    }
    CHECK(!find_induced(build_named("co_c7"), cycle_graph(5)));
    SECTION("f1 is the wheel plus a pendant") {
        const auto e = find_induced(build_named("f1"), build_named("f2"));
        REQUIRE(e);
        CHECK(verify_embedding(build_named("f1"), build_named("f2"), *e));
    }
    CHECK(!find_induced(cycle_graph(5), path_graph(6)));
    CHECK(find_induced(Graph(3), Graph(0)));
}

TEST_CASE("family freeness") {
    CHECK(is_family_free(cycle_graph(5), parse_family("p6,bull")));
    CHECK(!is_family_free(build_named("h1"), parse_family("bull")));
    CHECK(is_family_free(build_named("co_c9"), parse_family("p6,bull")));
    CHECK(is_family_free(build_named("co_c7"), parse_family("p6,bull")));
    for (const char* name : {"d", "e", "h2", "h3"})
        CHECK(is_family_free(build_named(name), parse_family("p6,bull")));
    CHECK(is_family_free(build_named("f2"), parse_family("p6,bull,f1")));
    CHECK(is_family_free(build_named("f6"), parse_family("p6,bull,f2,f3,f4,f5")));
    CHECK(is_family_free(Graph(0), PatternFamily{}));
}

TEST_CASE("find_induced agrees with the naive subset check") {
    std::mt19937 rng(808);
    const std::vector<Graph> patterns = {path_graph(4),        path_graph(6),        build_named("bull"),
                                         build_named("chair"), build_named("banner"), cycle_graph(5),
                                         complete_graph(3),    cycle_graph(4)};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const Graph host = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 6));
        for (const Graph& pat : patterns) {
            const auto got = find_induced(host, pat);
            CHECK(static_cast<bool>(got) == naive_contains_induced(host, pat));
            if (got) CHECK(verify_embedding(host, pat, *got));
        }
    }
}

TEST_CASE("incremental family check pins the new vertex") {
    std::mt19937 rng(909);
    const PatternFamily fam = parse_family("p6,bull");
    int exercised = 0;
    while (exercised < 200) {
        const int n = 5 + static_cast<int>(rng() % 5);
        const Graph parent = random_graph(rng, n, 0.35);
        if (!is_family_free(parent, fam)) continue;
        ++exercised;
        const VertexSet nbrs = rng() & full_set(n);
        const Graph child = add_vertex(parent, nbrs);
        CHECK(is_family_free_incremental(child, fam, n) == is_family_free(child, fam));
    }
}

TEST_CASE("induced C5 discovery") {
    const auto ring = find_induced_c5(cycle_graph(5));
    REQUIRE(ring);
    CHECK(*ring == std::array<int, 5>{0, 1, 2, 3, 4});
    CHECK(!find_induced_c5(complete_graph(5)));
    CHECK(!find_induced_c5(build_named("co_c7")));
    SECTION("hubs cannot lie on an induced C5") {
        const auto r = find_induced_c5(build_named("c5_join_k2"));
        REQUIRE(r);
        VertexSet s = 0;
        for (int v : *r) s |= vbit(v);
        CHECK(s == full_set(5));
    }
    SECTION("every reported ring is an induced C5 in cycle order, each exactly once") {
        std::mt19937 rng(1010);
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = random_graph(rng, 9, 0.4);
            const auto rings = all_induced_c5(g);
            std::set<VertexSet> sets;
            for (const auto& r : rings) {
                VertexSet s = 0;
                for (int j = 0; j < 5; ++j) {
                    s |= vbit(r[j]);
                    CHECK(g.edge(r[j], r[(j + 1) % 5]));
                    CHECK(!g.edge(r[j], r[(j + 2) % 5]));
                }
                CHECK(sets.insert(s).second);
            }
        }
    }
}

TEST_CASE("perfection via odd holes and antiholes") {
    CHECK(is_perfect(complete_graph(5)));
    CHECK(!is_perfect(cycle_graph(5)));
    CHECK(is_perfect(build_named("bull")));
    CHECK(!is_perfect(cycle_graph(7)));
    CHECK(!is_perfect(complement(cycle_graph(7))));
    CHECK(is_perfect(path_graph(6)));
    CHECK_THROWS_AS(is_perfect(Graph(21)), std::invalid_argument);

    SECTION("matches chi = omega over all induced subgraphs") {
        std::mt19937 rng(1111);
        for (int trial = 0; trial < 120; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const Graph g = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 6));
            CHECK(is_perfect(g) == naive_chi_equals_omega_everywhere(g));
        }
    }
}

TEST_CASE("pattern family files") {
    std::stringstream file;
    file << "p6\t" << encode_graph6(path_graph(6)) << '\n';
    file << "# comment\n";
    file << "bull\t" << encode_graph6(build_named("bull")) << '\n';
    const PatternFamily fam = load_family_file(file);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].name == "p6");
    CHECK(fam[1].graph == build_named("bull"));

    std::stringstream bad("p6 no-tab-here\n");
    CHECK_THROWS_AS(load_family_file(bad), std::invalid_argument);
}
