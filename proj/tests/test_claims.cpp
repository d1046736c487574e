#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "critgraph/claims.hpp"
#include "critgraph/named.hpp"

using namespace critgraph;

namespace {

std::map<int, ClaimResult> by_id(const ClaimReport& rep) {
    std::map<int, ClaimResult> m;
    for (const auto& r : rep) m[r.id] = r;
    return m;
}

bool any_unconditional_violation(const ClaimReport& rep) {
    for (const auto& r : rep)
        if (r.status == ClaimStatus::violated) return true;
    return false;
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = claim_registry();
    REQUIRE(reg.size() == 44);
    for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].id == static_cast<int>(i) + 1);
    int assume = 0;
    for (const auto& spec : reg)
        if (spec.cls == ClaimClass::assume) ++assume;
    CHECK(assume == 18);
}

TEST_CASE("a bare ring holds everything vacuously") {
    const ClaimReport rep = audit_claims(cycle_graph(5), {0, 1, 2, 3, 4});
    REQUIRE(rep.size() == 44);
    for (const auto& r : rep) {
        INFO(r.name);
        CHECK(r.status == ClaimStatus::holds);
    }
}

TEST_CASE("the ring joined with k2 violates exactly the expected assume-class claims") {
    const ClaimReport rep = audit_claims(build_named("c5_join_k2"), {0, 1, 2, 3, 4});
    const auto m = by_id(rep);
    CHECK(!any_unconditional_violation(rep));
    // The hub pair is an edge inside s5.
    CHECK(m.at(5).status == ClaimStatus::assume_violated);
    REQUIRE(m.at(5).witness.size() == 2);
    CHECK(m.at(5).witness[0] == 5);
    CHECK(m.at(5).witness[1] == 6);
    // Ring plus one hub is a 4-chromatic homogeneous set.
    CHECK(m.at(1).status == ClaimStatus::assume_violated);
    // The graph contains the 5-wheel and s5 is nonempty.
    CHECK(m.at(29).status == ClaimStatus::assume_violated);
    // s0 is empty, so the either-empty claim holds.
    CHECK(m.at(28).status == ClaimStatus::holds);
}

TEST_CASE("the forbidden configurations trip their unconditional claims") {
    SECTION("d has an edge between s1(0) and s4(0)") {
        const auto m = by_id(audit_claims(build_named("d"), {0, 1, 2, 3, 4}));
        CHECK(m.at(13).status == ClaimStatus::violated);
        REQUIRE(m.at(13).witness.size() == 2);
        CHECK(m.at(13).witness[0] == 5);
        CHECK(m.at(13).witness[1] == 6);
    }
    SECTION("e has a non-clique s4(0)") {
        const auto m = by_id(audit_claims(build_named("e"), {0, 1, 2, 3, 4}));
        CHECK(m.at(24).status == ClaimStatus::violated);
    }
    SECTION("h2 has an edge between s2 and s4") {
        const auto m = by_id(audit_claims(build_named("h2"), {0, 1, 2, 3, 4}));
        CHECK(m.at(20).status == ClaimStatus::violated);
    }
    SECTION("an adjacent-pair attachment breaks pattern closure") {
        const Graph g = add_vertex(cycle_graph(5), vbit(0) | vbit(1));
        const auto m = by_id(audit_claims(g, {0, 1, 2, 3, 4}));
        CHECK(m.at(2).status == ClaimStatus::violated);
        REQUIRE(m.at(2).witness.size() == 1);
        CHECK(m.at(2).witness[0] == 5);
    }
    SECTION("f6 itself reports the f6-freeness assumption") {
        const auto m = by_id(audit_claims(build_named("f6"), {0, 1, 2, 3, 4}));
        CHECK(m.at(44).status == ClaimStatus::assume_violated);
        CHECK(m.at(43).status == ClaimStatus::holds);
    }
    SECTION("f3 violates the s2-s3 anticompleteness the assume chain derives") {
        const auto m = by_id(audit_claims(build_named("f3"), {0, 1, 2, 3, 4}));
        // vertex 5 in s2(0), vertex 6 in s3(0), adjacent
        CHECK(m.at(35).status == ClaimStatus::assume_violated);
        CHECK(m.at(43).status == ClaimStatus::assume_violated);
    }
}

TEST_CASE("witnesses re-verify against their predicates") {
    // The s5-stability witness must be an edge inside s5, the closure
    // witness an unclassified vertex, and so on for the cases above.
    const Graph cj = build_named("c5_join_k2");
    const auto m = by_id(audit_claims(cj, {0, 1, 2, 3, 4}));
    const auto& w5 = m.at(5).witness;
    CHECK(cj.edge(w5[0], w5[1]));

    const Graph d = build_named("d");
    const auto dm = by_id(audit_claims(d, {0, 1, 2, 3, 4}));
    CHECK(d.edge(dm.at(13).witness[0], dm.at(13).witness[1]));
}

TEST_CASE("report formatting") {
    const std::string text = format_claim_report(audit_claims(build_named("d"), {0, 1, 2, 3, 4}));
    std::istringstream in(text);
    std::string line;
    int lines = 0;
    bool saw13 = false;
    while (std::getline(in, line)) {
        ++lines;
        REQUIRE(line.rfind("claim", 0) == 0);
        const auto t1 = line.find('\t');
        REQUIRE(t1 != std::string::npos);
        if (line.rfind("claim13\t", 0) == 0) {
            saw13 = true;
            CHECK(line == "claim13\tviolated\t5 6");
        }
    }
    CHECK(lines == 44);
    CHECK(saw13);
}
