#include "doctest.h"

#include <filesystem>
#include <functional>
#include <string>

#include "sgcolor/exact.hpp"
#include "sgcolor/gen.hpp"
#include "sgcolor/io.hpp"

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

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parsing the documented graph format") {
    std::string text =
        "c family=cycle\n"
        "c n=3\n"
        "c free-form comment without an equals sign is skipped\n"
        "p signed 3 3\n"
        "e 1 2 +\n"
        "e 2 3 +\n"
        "e 3 1 -\n";
    ParsedSignedGraph parsed = parse_signed_graph(text);
    const SignedGraph& sg = parsed.sg;
    CHECK(sg.graph.vertex_count() == 3);
    CHECK(sg.graph.edge_count() == 3);
    CHECK(sg.graph.edge(0).u == 0);
    CHECK(sg.graph.edge(0).v == 1);
    CHECK(sg.signature.sign(0) == 1);
    CHECK(sg.signature.sign(2) == -1);
    CHECK(parsed.metadata.at("family") == "cycle");
    CHECK(parsed.metadata.at("n") == "3");
    CHECK(parsed.metadata.size() == 2);

    // Tabs, CRLF endings, blank lines and a trailing unterminated line all parse.
    std::string messy = "p signed 2 1\r\n\n\te\t1  2\t-";
    ParsedSignedGraph tight = parse_signed_graph(messy);
    CHECK(tight.sg.graph.edge_count() == 1);
    CHECK(tight.sg.signature.sign(0) == -1);

    // An isolated vertex needs no edge lines.
    ParsedSignedGraph lone = parse_signed_graph("p signed 1 0\n");
    CHECK(lone.sg.graph.vertex_count() == 1);
    CHECK(lone.sg.graph.edge_count() == 0);
}

TEST_CASE("graph parser rejects malformed input with line numbers") {
    CHECK(code_of([] { parse_signed_graph(""); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("c only=comments\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3\ne 1 2 +\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p graph 3 3\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 0 0\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 -1\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("e 1 2 +\np signed 3 1\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\np signed 3 1\ne 1 2 +\n"); }) ==
          Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 1 4 +\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 0 2 +\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 1 2\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne one 2 +\n"); }) == Errc::syntax_error);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\nq 1 2 +\n"); }) == Errc::syntax_error);

    // Wrong sign token carries its own code and points at the offending line.
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 1 2 *\n"); }) == Errc::bad_sign);
    std::string msg = message_of([] { parse_signed_graph("p signed 3 1\ne 1 2 *\n"); });
    CHECK(msg.find("line 2") != std::string::npos);

    // Header/body disagreement and structural problems found at the end.
    CHECK(code_of([] { parse_signed_graph("p signed 3 2\ne 1 2 +\n"); }) == Errc::header_mismatch);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 1 2 +\ne 2 3 -\n"); }) ==
          Errc::header_mismatch);
    CHECK(code_of([] { parse_signed_graph("p signed 3 2\ne 1 2 +\ne 2 1 -\n"); }) ==
          Errc::duplicate_edge);
    CHECK(code_of([] { parse_signed_graph("p signed 3 1\ne 2 2 +\n"); }) == Errc::self_loop);
}

TEST_CASE("graph serialization round-trips") {
    GenResult gen = make_necklace({1, 2, 3});
    SignedGraph sg{gen.graph, random_signature(gen.graph, 13)};
    std::string text = serialize_signed_graph(sg, gen.metadata);

    ParsedSignedGraph back = parse_signed_graph(text);
    CHECK(back.sg.graph.vertex_count() == sg.graph.vertex_count());
    REQUIRE(back.sg.graph.edge_count() == sg.graph.edge_count());
    for (EdgeId e = 0; e < sg.graph.edge_count(); ++e) {
        CHECK(back.sg.graph.edge(e).u == sg.graph.edge(e).u);
        CHECK(back.sg.graph.edge(e).v == sg.graph.edge(e).v);
        CHECK(back.sg.signature.sign(e) == sg.signature.sign(e));
    }
    CHECK(back.metadata == gen.metadata);

    // Serializing the parse reproduces the text exactly (normal form).
    CHECK(serialize_signed_graph(back.sg, back.metadata) == text);
}

TEST_CASE("coloring serialization and parsing") {
    GenResult gen = make_cycle(5);
    SignedGraph sg{gen.graph, all_negative_signature(gen.graph)};
    ChromaticResult res = exact_chromatic_index(sg);

    std::string text = serialize_coloring(sg.graph, res.witness);
    IncidenceColoring back = parse_coloring(text, sg.graph);
    CHECK(back.n_colors() == res.witness.n_colors());
    for (EdgeId e = 0; e < sg.graph.edge_count(); ++e) {
        CHECK(back.side(e, 0) == res.witness.side(e, 0));
        CHECK(back.side(e, 1) == res.witness.side(e, 1));
    }
    CHECK(verify_coloring(sg, back).valid);

    // Lower endpoint's record precedes the higher one for every edge.
    std::string first_lines = text.substr(0, text.find('\n'));
    CHECK(first_lines == "n 3");
    size_t i1 = text.find("i ");
    size_t i2 = text.find("i ", i1 + 1);
    CHECK(text.compare(i1, 6, "i 1 1 ") == 0);
    CHECK(text.compare(i2, 6, "i 2 1 ") == 0);

    // Order of records within the file does not matter to the parser.
    std::string swapped = "n 3\n";
    std::vector<std::string> records;
    size_t pos = text.find('\n') + 1;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        records.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto it = records.rbegin(); it != records.rend(); ++it) swapped += *it + "\n";
    IncidenceColoring shuffled = parse_coloring(swapped, sg.graph);
    CHECK(verify_coloring(sg, shuffled).valid);
}

TEST_CASE("coloring parser rejects malformed input") {
    Graph g = make_path(3).graph;  // edges 1-2, 2-3

    CHECK(code_of([&] { parse_coloring("", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("i 1 1 2 0\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\nn 2\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n -1\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\ni 1 1 2\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\ni 1 1 3 1\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\ni 3 1 2 1\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\ni 1 1 9 1\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] { parse_coloring("n 2\nz 1 1 2 1\n", g); }) == Errc::syntax_error);
    CHECK(code_of([&] {
              parse_coloring("n 2\ni 1 1 2 1\ni 1 1 2 1\n", g);
          }) == Errc::syntax_error);  // duplicate incidence
    CHECK(code_of([&] { parse_coloring("n 2\ni 1 1 2 4000000000\n", g); }) ==
          Errc::syntax_error);

    // Valid records, wrong total.
    CHECK(code_of([&] { parse_coloring("n 2\ni 1 1 2 1\n", g); }) == Errc::header_mismatch);

    // An edgeless graph needs only the header.
    IncidenceColoring empty = parse_coloring("n 0\n", Graph(2, {}));
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("serializer refuses foreign or partial colorings") {
    Graph g = make_path(3).graph;
    IncidenceColoring wrong_size(2, 5);
    CHECK(code_of([&] { serialize_coloring(g, wrong_size); }) == Errc::domain_mismatch);

    IncidenceColoring partial(2, g.edge_count());
    partial.set(g, 0, 0, 1);  // three of four incidences stay unset
    CHECK(code_of([&] { serialize_coloring(g, partial); }) == Errc::invalid_coloring);
}

TEST_CASE("text files read back what was written") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sgcolor-io-test";
    fs::create_directories(dir);
    std::string path = (dir / "roundtrip.sg").string();

    std::string text = serialize_signed_graph(
        {make_star(4).graph, all_positive_signature(make_star(4).graph)});
    write_text_file(path, text);
    CHECK(read_text_file(path) == text);

    ParsedSignedGraph parsed = parse_signed_graph(read_text_file(path));
    CHECK(parsed.sg.graph.vertex_count() == 4);

    CHECK(code_of([&] { read_text_file((dir / "missing.sg").string()); }) ==
          Errc::invalid_argument);
    CHECK(code_of([&] { write_text_file((dir / "no" / "such" / "dir.sg").string(), "x"); }) ==
          Errc::invalid_argument);
    fs::remove_all(dir);
}
