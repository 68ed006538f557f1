#include "doctest.h"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "sgcolor/colorers.hpp"
#include "sgcolor/gen.hpp"

using namespace sgc;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal_error;
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("path, cycle and star builders") {
    GenResult p1 = make_path(1);
    CHECK(p1.graph.vertex_count() == 1);
    CHECK(p1.graph.edge_count() == 0);

    GenResult p4 = make_path(4);
    CHECK(p4.graph.vertex_count() == 4);
    CHECK(edge_list(p4.graph) ==
          std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.metadata.at("family") == "path");
    CHECK(p4.metadata.at("n") == "4");

    GenResult c5 = make_cycle(5);
    CHECK(c5.graph.edge_count() == 5);
    for (VertexId v = 0; v < 5; ++v) CHECK(c5.graph.degree(v) == 2);
    CHECK(c5.graph.find_edge(4, 0).has_value());
    CHECK(c5.graph.connected());

    GenResult s5 = make_star(5);
    CHECK(s5.graph.edge_count() == 4);
    CHECK(s5.graph.degree(0) == 4);
    for (VertexId v = 1; v < 5; ++v) CHECK(s5.graph.degree(v) == 1);
    CHECK(s5.metadata.at("center") == "1");  // vertex ids in metadata are 1-indexed

    CHECK(code_of([] { make_path(0); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_cycle(2); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_star(1); }) == Errc::invalid_spec);
}

TEST_CASE("wheel builder produces hub plus rim cycle") {
    GenResult w6 = make_wheel(6);
    const Graph& g = w6.graph;
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 10);
    CHECK(g.degree(0) == 5);
    for (VertexId v = 1; v < 6; ++v) {
        CHECK(g.degree(v) == 3);
        CHECK(g.find_edge(0, v).has_value());
        VertexId next = v == 5 ? 1 : v + 1;
        CHECK(g.find_edge(v, next).has_value());
    }
    CHECK(w6.metadata.at("hub") == "1");

    WheelStructure ws = recognize_wheel(g);
    CHECK(ws.hub == 0);

    CHECK(code_of([] { make_wheel(3); }) == Errc::invalid_spec);
}

TEST_CASE("necklace builder joins two hubs by disjoint paths") {
    GenResult theta = make_necklace({2, 2, 2});
    const Graph& g = theta.graph;
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 3);
    for (VertexId v = 2; v < 5; ++v) {
        CHECK(g.degree(v) == 2);
        CHECK(g.find_edge(0, v).has_value());
        CHECK(g.find_edge(v, 1).has_value());
    }
    CHECK(theta.metadata.at("hubs") == "1,2");
    CHECK(theta.metadata.at("lengths") == "2,2,2");

    // One direct edge plus a two-edge path closes into a triangle.
    GenResult tri = make_necklace({1, 2});
    CHECK(tri.graph.vertex_count() == 3);
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.graph.find_edge(0, 1).has_value());

    GenResult mixed = make_necklace({3, 1, 4});
    CHECK(mixed.graph.vertex_count() == 2 + 2 + 0 + 3);
    CHECK(mixed.graph.edge_count() == 8);
    NecklaceStructure ns = recognize_necklace(mixed.graph);
    CHECK(ns.paths.size() == 3);

    CHECK(code_of([] { make_necklace({3}); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_necklace({1, 1, 3}); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_necklace({0, 2}); }) == Errc::invalid_spec);
}

TEST_CASE("complete bipartite builder emits rows in order") {
    GenResult kb = make_complete_bipartite(2, 3);
    const Graph& g = kb.graph;
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    // Row-major: edge ids follow u0's row then u1's row.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            EdgeId e = 3 * i + j;
            CHECK(g.edge(e).u == i);
            CHECK(g.edge(e).v == 2 + j);
        }
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(2) == 2);
    CHECK(kb.metadata.at("r") == "2");
    CHECK(kb.metadata.at("t") == "3");

    GenResult single = make_complete_bipartite(1, 1);
    CHECK(single.graph.edge_count() == 1);

    CHECK(code_of([] { make_complete_bipartite(0, 3); }) == Errc::invalid_spec);
}

TEST_CASE("random cactus generator is deterministic and always yields a cactus") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 20260819ULL}) {
        GenResult r = make_random_cactus(25, seed);
        CHECK(r.graph.vertex_count() == 25);
        CHECK(r.graph.connected());
        CHECK_NOTHROW(decompose_cactus(r.graph));  // cactushood by construction

        GenResult again = make_random_cactus(25, seed);
        CHECK(edge_list(r.graph) == edge_list(again.graph));
    }

    GenResult tiny = make_random_cactus(1, 5);
    CHECK(tiny.graph.vertex_count() == 1);
    CHECK(tiny.graph.edge_count() == 0);

    // All-pendant mode grows a tree.
    GenResult tree = make_random_cactus(12, 3, 0.0);
    CHECK(tree.graph.edge_count() == 11);
    for (const auto& part : decompose_cactus(tree.graph).parts) CHECK_FALSE(part.is_cycle);

    // All-cycle mode with minimum length grows a chain of triangles (the
    // vertex count is odd so no truncated final pendant is needed).
    GenResult tris = make_random_cactus(9, 11, 1.0, 3);
    auto blocks = decompose_cactus(tris.graph).parts;
    CHECK(blocks.size() == 4);
    for (const auto& part : blocks) {
        CHECK(part.is_cycle);
        CHECK(part.edges.size() == 3);
    }

    CHECK(code_of([] { make_random_cactus(0, 1); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_random_cactus(5, 1, 0.5, 2); }) == Errc::invalid_spec);
    CHECK(code_of([] { make_random_cactus(5, 1, 1.5); }) == Errc::invalid_spec);
}

TEST_CASE("doubled bipartite construction has the promised degree profile") {
    for (int k = 1; k <= 3; ++k) {
        GenResult r = make_class2pm(k);
        const Graph& g = r.graph;
        int n = g.vertex_count();
        CHECK(n == 8 * k + 3);
        CHECK(g.connected());
        CHECK(max_degree(g) == 2 * k + 1);

        VertexId middle = 2 * (4 * k + 1);
        CHECK(g.degree(middle) == 2);
        for (VertexId v = 0; v < n; ++v)
            if (v != middle) CHECK(g.degree(v) == 2 * k + 1);

        CHECK(r.metadata.at("delta") == std::to_string(2 * k + 1));
        CHECK(r.metadata.at("middle") == std::to_string(middle + 1));
    }
    GenResult one = make_class2pm(1);
    CHECK(one.graph.edge_count() == 16);

    CHECK(code_of([] { make_class2pm(0); }) == Errc::invalid_spec);
}

TEST_CASE("family dispatcher forwards parameters and rejects bad specs") {
    FamilySpec wheel{"wheel", {6}};
    CHECK(edge_list(generate(wheel).graph) == edge_list(make_wheel(6).graph));

    FamilySpec necklace{"necklace", {2, 3, 4}};
    CHECK(edge_list(generate(necklace).graph) == edge_list(make_necklace({2, 3, 4}).graph));

    FamilySpec bip{"complete_bipartite", {2, 4}};
    CHECK(generate(bip).graph.edge_count() == 8);

    FamilySpec cactus{"random_cactus", {15}};
    cactus.seed = 77;
    CHECK(edge_list(generate(cactus).graph) == edge_list(make_random_cactus(15, 77).graph));

    FamilySpec hard{"class2pm", {2}};
    CHECK(generate(hard).graph.vertex_count() == 19);

    CHECK(code_of([] { generate({"triangulation", {3}}); }) == Errc::invalid_spec);
    CHECK(code_of([] { generate({"wheel", {}}); }) == Errc::invalid_spec);
    CHECK(code_of([] { generate({"wheel", {4, 5}}); }) == Errc::invalid_spec);
    CHECK(code_of([] { generate({"path", {1LL << 40}}); }) == Errc::invalid_spec);
    CHECK(code_of([] { generate({"necklace", {}}); }) == Errc::invalid_spec);
}

TEST_CASE("signature helpers") {
    Graph g = make_cycle(4).graph;
    Signature pos = all_positive_signature(g);
    Signature neg = all_negative_signature(g);
    CHECK(pos.size() == 4);
    CHECK(neg.size() == 4);
    for (EdgeId e = 0; e < 4; ++e) {
        CHECK(pos.sign(e) == 1);
        CHECK(neg.sign(e) == -1);
    }
    CHECK(pos.negative_count() == 0);
    CHECK(neg.negative_count() == 4);

    Signature r1 = random_signature(g, 9);
    Signature r2 = random_signature(g, 9);
    CHECK(r1 == r2);
    for (EdgeId e = 0; e < 4; ++e) CHECK((r1.sign(e) == 1 || r1.sign(e) == -1));

    // Different seeds disagree somewhere on a long path.
    Graph big = make_path(40).graph;
    Signature a = random_signature(big, 1);
    Signature b = random_signature(big, 2);
    CHECK(a != b);
}
