#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sgcolor/core.hpp"
#include "sgcolor/exact.hpp"

namespace sgc {

// Colors the given path with the pair {pair, -pair} (or {0} when pair == 0,
// allowed only for a single edge): the first incidence at `start` gets
// `anchor` (default: pair itself), the far side of each edge is forced by the
// edge constraint, and each interior vertex flips the pair element. Returns a
// partial coloring of sg touching only the path's incidences.
IncidenceColoring color_path(const SignedGraph& sg, std::span<const EdgeId> path_edges,
                             VertexId start, int pair, std::optional<int> anchor, int n_colors);

// The whole graph must be a single cycle. Balanced cycles 2-color with {+-1};
// unbalanced ones 3-color with one edge at {0,0} and the rest a {+-1} path.
IncidenceColoring color_cycle(const SignedGraph& sg);

struct CactusPart {
    bool is_cycle;
    std::vector<EdgeId> edges;       // walk order; edges[i] joins vertices[i], vertices[i+1]
    std::vector<VertexId> vertices;  // cycle: closing edge returns to vertices[0]
    VertexId attach;                 // shared vertex with earlier parts; -1 for the first
};

struct CactusDecomposition {
    std::vector<CactusPart> parts;
};

// Splits a cactus into blocks (single edges and cycles), parent-first, so
// every part after the first meets the union of its predecessors in exactly
// its attach vertex. Linear time.
CactusDecomposition decompose_cactus(const Graph& g);

// Delta-coloring of any signed cactus that is not a cycle. Linear time.
IncidenceColoring color_cactus(const SignedGraph& sg);

struct WheelStructure {
    VertexId hub;
    std::vector<VertexId> rim;  // cyclic order
};

WheelStructure recognize_wheel(const Graph& g);

// Path/matching decomposition behind the wheel coloring; on 4 vertices the
// matching choice depends on the signature (negative-edge parity must match
// the total), larger wheels are sign-independent.
Decomposition wheel_decomposition(const SignedGraph& sg, const WheelStructure& ws);

IncidenceColoring color_wheel(const SignedGraph& sg);

struct NecklaceStructure {
    VertexId u, v;                             // hubs
    std::vector<std::vector<VertexId>> paths;  // hub-to-hub, sorted by length ascending
};

// Two vertices of equal degree k >= 3 joined by k internally disjoint paths.
// A plain cycle raises IsACycle unless the two hubs are supplied explicitly,
// which reads it as a k = 2 necklace.
NecklaceStructure recognize_necklace(const Graph& g,
                                     std::optional<std::pair<VertexId, VertexId>> hubs = {});

IncidenceColoring color_necklace(const SignedGraph& sg);

struct BipartiteStructure {
    std::vector<VertexId> small_part;
    std::vector<VertexId> large_part;
};

BipartiteStructure recognize_complete_bipartite(const Graph& g);

// The s paths (plus a matching when the larger part has odd size) behind the
// complete bipartite coloring; requires unequal part sizes.
Decomposition bipartite_decomposition(const Graph& g, const BipartiteStructure& bs);

IncidenceColoring color_complete_bipartite(const SignedGraph& sg);

enum class Method { path, cycle, cactus, wheel, necklace, bipartite, exact };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct AutoResult {
    IncidenceColoring coloring;
    Method method;
};

// Tries the constructive colorers in fixed order (path, cycle, cactus, wheel,
// necklace, complete bipartite with unequal parts) and falls back to the
// exact solver. Always total; constructive hits use exactly Delta colors.
AutoResult auto_color(const SignedGraph& sg, const SolveOptions& opts = {});

}  // namespace sgc
