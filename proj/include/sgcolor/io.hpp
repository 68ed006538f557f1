#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sgcolor/core.hpp"

namespace sgc {

// Graph text format ("p signed" header, 1-indexed "e u v +|-" lines,
// "c key=value" metadata comments):
//
//   c family=cycle
//   p signed 3 3
//   e 1 2 +
//   e 2 3 +
//   e 3 1 -
struct ParsedSignedGraph {
    SignedGraph sg;
    std::map<std::string, std::string> metadata;
};

ParsedSignedGraph parse_signed_graph(std::string_view text);

// Deterministic: metadata sorted by key, edges in id order. Parsing the
// result reproduces the input exactly (round-trip on normalized text).
std::string serialize_signed_graph(const SignedGraph& sg,
                                   const std::map<std::string, std::string>& metadata = {});

// Coloring text format: "n <colors>" header, then one record per incidence,
// "i <vertex> <u> <v> <color>", 1-indexed, ordered by edge id with the lower
// endpoint's record first. The graph supplies the edge identities.
IncidenceColoring parse_coloring(std::string_view text, const Graph& g);

std::string serialize_coloring(const Graph& g, const IncidenceColoring& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace sgc
