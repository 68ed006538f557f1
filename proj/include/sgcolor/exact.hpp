#pragma once

#include <vector>

#include "sgcolor/core.hpp"

namespace sgc {

struct SolveOptions {
    int max_edges = 64;  // refuse larger inputs at n = Delta unless forced
    bool force = false;
};

struct ChromaticResult {
    int delta;
    int chi;  // always delta or delta + 1
    IncidenceColoring witness;
};

// Searches for a complete proper coloring with palette M_n. Backtracks over
// edges (each edge branch fixes the stored-u incidence; the other side is
// forced by the edge constraint). Returns the coloring on success.
std::optional<IncidenceColoring> try_color_with(const SignedGraph& sg, int n_colors,
                                                const SolveOptions& opts = {});

// Chromatic index with witness: tries Delta, falls back to Delta + 1. A graph
// failing both would contradict the known bounds and raises an internal
// error. Disconnected inputs are solved per component.
ChromaticResult exact_chromatic_index(const SignedGraph& sg, const SolveOptions& opts = {});

enum class PartKind { path, cycle, matching, two_regular_spanning };

struct DecompositionPart {
    PartKind kind;
    std::vector<EdgeId> edges;
};

struct Decomposition {
    std::vector<DecompositionPart> parts;
};

// For a k-regular signed graph: k = 2r needs exactly r spanning 2-regular
// balanced parts; k = 2r+1 needs those plus one perfect matching. r = 0 with
// k = 1 (a bare perfect matching) is accepted as an extension. Parts must be
// edge-disjoint and cover every edge. Throws NotRegular if the graph is not
// regular; structural mismatches just return false.
bool verify_regular_decomposition(const SignedGraph& sg, const Decomposition& d);

// Reads the decomposition off a Delta-coloring of a Delta-regular graph:
// edges colored with pair {+-j} form the j-th spanning 2-regular part, edges
// colored 0 the matching.
Decomposition extract_decomposition(const SignedGraph& sg, const IncidenceColoring& c);

// Assembles a coloring from a decomposition: matching parts get color 0 on
// both incidences, every other part gets its own pair {+-j} propagated along
// its paths/cycles (cycles must be balanced). Color count is 2 * (number of
// pair parts) + 1 if a matching part is present.
IncidenceColoring color_from_decomposition(const SignedGraph& sg, const Decomposition& d);

}  // namespace sgc
