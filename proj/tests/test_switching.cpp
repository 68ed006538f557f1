#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgcolor/core.hpp"
#include "sgcolor/exact.hpp"
#include "sgcolor/gen.hpp"
#include "sgcolor/switching.hpp"

using namespace sgc;

namespace {

std::vector<std::int8_t> signs_of(const SignedGraph& sg) {
    std::vector<std::int8_t> out;
    for (EdgeId e = 0; e < sg.graph.edge_count(); ++e)
        out.push_back(static_cast<std::int8_t>(sg.signature.sign(e)));
    return out;
}

// Exhaustively confirms that the representatives hit every switching class of
// g exactly once and that all classes have the same size 2^(n-c).
void check_representatives(const Graph& g) {
    int m = g.edge_count();
    REQUIRE(m <= 16);
    long long class_size = 1ll << (g.vertex_count() - g.component_count());

    std::set<std::vector<std::int8_t>> canon_all;
    for (std::uint64_t idx = 0; idx < (1ull << m); ++idx) {
        SignedGraph sg{g, signature_from_index(m, idx)};
        auto cls = oracle::switching_class(sg);
        CHECK(static_cast<long long>(cls.size()) == class_size);
        canon_all.insert(*cls.begin());
    }

    SwitchingClassRepresentatives reps(g);
    CHECK(reps.count() == (1ull << (m - g.vertex_count() + g.component_count())));
    CHECK(reps.count() == canon_all.size());
    std::set<std::vector<std::int8_t>> canon_reps;
    for (std::uint64_t i = 0; i < reps.count(); ++i) {
        SignedGraph sg{g, reps.at(i)};
        canon_reps.insert(*oracle::switching_class(sg).begin());
    }
    CHECK(canon_reps == canon_all);  // one per class, none missed, none doubled
}

}  // namespace

TEST_CASE("switching negates exactly the cut edges") {
    SignedGraph sg = build_signed_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    SwitchSet s = make_switch_set(sg.graph, {1, 2});
    SignedGraph t = switched(sg, s);
    CHECK(t.signature.sign(0) == -1);  // 0-1 crosses
    CHECK(t.signature.sign(1) == 1);   // 1-2 inside
    CHECK(t.signature.sign(2) == -1);  // 2-3 crosses
    CHECK(t.signature.sign(3) == 1);

    SUBCASE("switching twice is the identity") {
        CHECK(signs_of(switched(t, s)) == signs_of(sg));
    }
    SUBCASE("switch sets are sorted, deduplicated and validated") {
        CHECK(make_switch_set(sg.graph, {2, 1, 2}).vertices == std::vector<VertexId>{1, 2});
        CHECK_THROWS_AS(make_switch_set(sg.graph, {7}), Error);
    }
    SUBCASE("complementary sets act identically and canonicalize together") {
        SwitchSet comp = make_switch_set(sg.graph, {0, 3});
        CHECK(signs_of(switched(sg, comp)) == signs_of(t));
        CHECK(canonical_switch_set(sg.graph, comp) == canonical_switch_set(sg.graph, s));
        // the canonical side avoids vertex 0
        CHECK(canonical_switch_set(sg.graph, s).vertices == std::vector<VertexId>{1, 2});
    }
}

TEST_CASE("balance detection") {
    SignedGraph balanced = build_signed_graph(3, {{0, 1, 1}, {1, 2, -1}, {2, 0, -1}});
    SignedGraph unbalanced = build_signed_graph(3, {{0, 1, -1}, {1, 2, -1}, {2, 0, -1}});
    CHECK(is_balanced(balanced));
    CHECK(!is_balanced(unbalanced));

    auto p = balance_potentials(balanced);
    REQUIRE(p.has_value());
    CHECK((*p)[0] == 1);  // anchored +1 at the lowest vertex
    for (EdgeId e = 0; e < 3; ++e) {
        auto ends = balanced.graph.edge(e);
        CHECK(balanced.signature.sign(e) == (*p)[ends.u] * (*p)[ends.v]);
    }
    CHECK(!balance_potentials(unbalanced).has_value());

    std::vector<VertexId> tri{0, 1, 2};
    CHECK(cycle_sign(balanced, tri) == 1);
    CHECK(cycle_sign(unbalanced, tri) == -1);

    SUBCASE("cycle sign is invariant under switching") {
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            std::vector<VertexId> on;
            for (VertexId v = 0; v < 3; ++v)
                if ((mask >> v) & 1) on.push_back(v);
            SwitchSet s = make_switch_set(unbalanced.graph, on);
            CHECK(cycle_sign(switched(unbalanced, s), tri) == -1);
            CHECK(cycle_sign(switched(balanced, s), tri) == 1);
        }
    }

    SUBCASE("trees are always balanced") {
        for (std::uint64_t idx = 0; idx < 8; ++idx) {
            SignedGraph path{make_path(4).graph, signature_from_index(3, idx)};
            CHECK(is_balanced(path));
        }
    }
}

TEST_CASE("switching equivalence witnesses") {
    SignedGraph sg = build_signed_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    SwitchSet s = make_switch_set(sg.graph, {1});
    SignedGraph t = switched(sg, s);

    auto w = switching_equivalent(sg, t);
    REQUIRE(w.has_value());
    CHECK(signs_of(switched(sg, *w)) == signs_of(t));

    // one negative edge on a cycle changes the balance: not equivalent
    SignedGraph odd = build_signed_graph(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(!switching_equivalent(sg, odd).has_value());
    CHECK_THROWS_AS(
        switching_equivalent(sg, build_signed_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})),
        Error);
}

TEST_CASE("colorings transport across switches") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        GenResult gr = make_random_cactus(3 + static_cast<int>(rng() % 6), rng());
        const Graph& g = gr.graph;
        SignedGraph sg{g, random_signature(g, rng())};
        std::vector<VertexId> on;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1) on.push_back(v);
        SwitchSet s = make_switch_set(g, on);

        ChromaticResult before = exact_chromatic_index(sg);
        SignedGraph after = switched(sg, s);
        IncidenceColoring moved = transport_coloring(g, before.witness, s);
        CHECK(verify_coloring(after, moved).valid);
        CHECK(oracle::valid_coloring(after, moved));
        CHECK(moved.n_colors() == before.witness.n_colors());
        CHECK(exact_chromatic_index(after).chi == before.chi);
    }
}

TEST_CASE("switching class representatives partition the signature space") {
    check_representatives(build_signed_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}).graph);
    check_representatives(make_cycle(4).graph);
    check_representatives(make_path(4).graph);  // tree: a single class
    check_representatives(make_necklace({2, 2, 2}).graph);
    check_representatives(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));  // K4

    SUBCASE("disconnected graphs canonicalize per component") {
        check_representatives(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
    }

    SUBCASE("indexing out of range throws") {
        SwitchingClassRepresentatives reps(make_cycle(4).graph);
        CHECK(reps.cotree_edge_count() == 1);
        CHECK(reps.count() == 2);
        CHECK_THROWS_AS(reps.at(2), Error);
    }
}
