#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgcolor/core.hpp"
#include "sgcolor/exact.hpp"
#include "sgcolor/gen.hpp"
#include "sgcolor/switching.hpp"

using namespace sgc;

namespace {

// Every signature of g: solver chi must equal the oracle's, the witness must
// verify, and try_color_with must refuse one color less.
void check_against_oracle(const Graph& g) {
    REQUIRE(g.edge_count() <= 8);
    for (std::uint64_t idx = 0; idx < (1ull << g.edge_count()); ++idx) {
        SignedGraph sg{g, signature_from_index(g.edge_count(), idx)};
        ChromaticResult r = exact_chromatic_index(sg);
        CHECK(r.delta == max_degree(g));
        CHECK(r.chi == oracle::chromatic_index(sg));
        CHECK(r.chi >= r.delta);
        CHECK(r.chi <= r.delta + 1);
        CHECK(verify_coloring(sg, r.witness).valid);
        CHECK(oracle::valid_coloring(sg, r.witness));
        CHECK(r.witness.n_colors() == r.chi);
        if (r.chi > 1) CHECK(!try_color_with(sg, r.chi - 1).has_value());
    }
}

}  // namespace

TEST_CASE("exact chromatic index matches brute force on small graphs") {
    check_against_oracle(build_signed_graph(2, {{0, 1, 1}}).graph);      // one edge
    check_against_oracle(make_path(4).graph);                            // P4
    check_against_oracle(make_cycle(3).graph);                           // triangle
    check_against_oracle(make_cycle(4).graph);                           // C4
    check_against_oracle(make_star(4).graph);                            // K_{1,3}
    check_against_oracle(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}));    // paw
    check_against_oracle(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}}));  // diamond
    check_against_oracle(
        Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));     // K4
    check_against_oracle(Graph(5, {{0, 1}, {1, 2}, {3, 4}}));            // disconnected
}

TEST_CASE("known chromatic indices") {
    // trees color with Delta
    CHECK(exact_chromatic_index(build_signed_graph(2, {{0, 1, -1}})).chi == 1);
    CHECK(exact_chromatic_index({make_star(5).graph, all_negative_signature(make_star(5).graph)})
              .chi == 4);
    // cycles: 2 iff balanced
    for (int n = 3; n <= 6; ++n) {
        Graph c = make_cycle(n).graph;
        CHECK(exact_chromatic_index({c, all_positive_signature(c)}).chi == 2);
        CHECK(exact_chromatic_index({c, signature_from_index(n, 1)}).chi == 3);
    }
    // balanced even-degree graphs stay at Delta
    Graph k5 = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                         {2, 3}, {2, 4}, {3, 4}});
    CHECK(exact_chromatic_index({k5, all_positive_signature(k5)}).chi == 4);
}

TEST_CASE("edgeless graphs have chromatic index zero") {
    SignedGraph sg{Graph(3, {}), Signature({})};
    ChromaticResult r = exact_chromatic_index(sg);
    CHECK(r.delta == 0);
    CHECK(r.chi == 0);
    CHECK(try_color_with(sg, 0).has_value());
}

TEST_CASE("search budget refuses big graphs unless forced") {
    SignedGraph sg{make_path(6).graph, all_positive_signature(make_path(6).graph)};
    SolveOptions tight;
    tight.max_edges = 4;
    CHECK_THROWS_AS(exact_chromatic_index(sg, tight), Error);
    CHECK_THROWS_AS(try_color_with(sg, 2, tight), Error);
    try {
        exact_chromatic_index(sg, tight);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exceeded);
    }
    tight.force = true;
    CHECK(exact_chromatic_index(sg, tight).chi == 2);
}

TEST_CASE("regular decompositions verify and color") {
    // K4 with one negative edge inside the 4-cycle part keeps it balanced:
    // edges 0=01, 1=02, 2=03, 3=12, 4=13, 5=23
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    SUBCASE("all-positive K4 splits into a matching and a balanced 4-cycle") {
        SignedGraph sg{k4, all_positive_signature(k4)};
        Decomposition d;
        d.parts.push_back({PartKind::matching, {0, 5}});                 // 01, 23
        d.parts.push_back({PartKind::two_regular_spanning, {1, 4, 3, 2}});  // 02,13,12,03
        CHECK(verify_regular_decomposition(sg, d));

        IncidenceColoring c = color_from_decomposition(sg, d);
        CHECK(c.n_colors() == 3);
        CHECK(verify_coloring(sg, c).valid);
        CHECK(oracle::valid_coloring(sg, c));

        Decomposition back = extract_decomposition(sg, c);
        CHECK(verify_regular_decomposition(sg, back));
    }

    SUBCASE("unbalanced cycle parts are rejected") {
        SignedGraph sg{k4, signature_from_index(6, 0b000010)};  // edge 02 negative
        Decomposition d;
        d.parts.push_back({PartKind::matching, {0, 5}});
        d.parts.push_back({PartKind::two_regular_spanning, {1, 4, 3, 2}});
        CHECK(!verify_regular_decomposition(sg, d));
        CHECK_THROWS_AS(color_from_decomposition(sg, d), Error);
    }

    SUBCASE("coverage gaps and overlaps are rejected") {
        SignedGraph sg{k4, all_positive_signature(k4)};
        Decomposition gap;
        gap.parts.push_back({PartKind::matching, {0, 5}});
        CHECK(!verify_regular_decomposition(sg, gap));
        Decomposition twice;
        twice.parts.push_back({PartKind::matching, {0, 5}});
        twice.parts.push_back({PartKind::two_regular_spanning, {1, 4, 3, 2}});
        twice.parts.push_back({PartKind::matching, {0, 5}});
        CHECK(!verify_regular_decomposition(sg, twice));
        CHECK_THROWS_AS(color_from_decomposition(sg, twice), Error);
    }

    SUBCASE("non-regular graphs cannot be decomposition-checked") {
        SignedGraph sg{make_path(3).graph, all_positive_signature(make_path(3).graph)};
        Decomposition d;
        d.parts.push_back({PartKind::matching, {0, 1}});
        CHECK_THROWS_AS(verify_regular_decomposition(sg, d), Error);
    }

    SUBCASE("extraction needs a Delta-coloring of a regular graph") {
        SignedGraph sg{k4, all_positive_signature(k4)};
        ChromaticResult r = exact_chromatic_index(sg);
        REQUIRE(r.chi == 3);
        Decomposition d = extract_decomposition(sg, r.witness);
        CHECK(verify_regular_decomposition(sg, d));
        IncidenceColoring again = color_from_decomposition(sg, d);
        CHECK(verify_coloring(sg, again).valid);
    }
}
