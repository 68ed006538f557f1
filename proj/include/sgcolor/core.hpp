#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "sgcolor/errors.hpp"

namespace sgc {

using VertexId = int;
using EdgeId = int;

struct EdgeEnds {
    VertexId u;
    VertexId v;

    bool operator==(const EdgeEnds&) const = default;
};

// Simple undirected graph. Vertices are 0-indexed; edge identity is the input
// position. Parallel edges and self-loops are rejected at construction.
// Immutable once built, so concurrent reads are safe.
class Graph {
  public:
    Graph(int vertex_count, std::vector<EdgeEnds> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeEnds& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeEnds>& edges() const { return edges_; }

    std::span<const EdgeId> incident_edges(VertexId v) const;
    int degree(VertexId v) const;
    VertexId other_end(EdgeId e, VertexId v) const;
    bool is_endpoint(VertexId v, EdgeId e) const;

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    int component_count() const;
    bool connected() const { return component_count() == 1; }
    // Component id per vertex, ids dense from 0 in order of lowest member.
    std::vector<int> component_ids() const;

    bool operator==(const Graph& rhs) const {
        return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_;
    }

  private:
    void check_vertex(VertexId v) const;

    int vertex_count_;
    std::vector<EdgeEnds> edges_;
    std::vector<int> inc_offsets_;
    std::vector<EdgeId> inc_edges_;
    std::unordered_map<std::uint64_t, EdgeId> edge_lookup_;
};

int max_degree(const Graph& g);

// Edge sign assignment, one of {+1, -1} per edge, indexed by edge id.
class Signature {
  public:
    explicit Signature(std::vector<std::int8_t> signs);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(EdgeId e) const { return signs_[e]; }
    const std::vector<std::int8_t>& signs() const { return signs_; }
    int negative_count() const;

    bool operator==(const Signature&) const = default;

  private:
    std::vector<std::int8_t> signs_;
};

struct SignedGraph {
    Graph graph;
    Signature signature;

    SignedGraph(Graph g, Signature s);
};

// Convenience builder: edges given as (u, v, sign) triples.
SignedGraph build_signed_graph(int vertex_count,
                               const std::vector<std::tuple<int, int, int>>& edges);

// Signature whose edge e is negative exactly when bit e of index is set.
// Indices with bits at or above edge_count are rejected (IndexOutOfRange).
Signature signature_from_index(int edge_count, std::uint64_t index);

// The palette M_n: {0, +-1, ..., +-k} when n = 2k+1, {+-1, ..., +-k} when
// n = 2k. Closed under negation; contains 0 iff n is odd.
struct ColorSet {
    int n;

    static ColorSet of(int n);

    // Members in canonical try order: 0, +1, -1, +2, -2, ... (0 present only
    // for odd n). Size is exactly n.
    std::vector<int> members() const;
    bool contains(int c) const;
    int max_magnitude() const { return n / 2; }
};

// c is in M_n; works for n = 0 (empty palette) too.
bool color_in_set(int n, int c);
// i-th color of M_n in canonical order, 0 <= i < n.
int canonical_color(int n, int i);

struct Incidence {
    VertexId vertex;
    EdgeId edge;
};

// Assignment of colors to incidences (vertex, edge), stored densely as two
// slots per edge (side 0 = stored u endpoint, side 1 = stored v endpoint).
// Holds its color count n explicitly: a 5-coloring that only uses {+-1} is
// still validated against M_5.
class IncidenceColoring {
  public:
    static constexpr int kUnset = std::numeric_limits<int>::min();

    IncidenceColoring(int n_colors, int edge_count);

    int n_colors() const { return n_colors_; }
    int edge_count() const { return static_cast<int>(slots_.size()); }

    int side(EdgeId e, int s) const { return slots_[e][s]; }
    void set_side(EdgeId e, int s, int c) { slots_[e][s] = c; }

    int at(const Graph& g, VertexId v, EdgeId e) const;
    void set(const Graph& g, VertexId v, EdgeId e, int c);

    bool complete() const;

    bool operator==(const IncidenceColoring&) const = default;

  private:
    int n_colors_;
    std::vector<std::array<int, 2>> slots_;
};

enum class ViolationKind {
    edge_constraint,     // f(u:uv) != -sigma(uv) * f(v:uv)
    vertex_properness,   // two incidences at one vertex share a color
    color_out_of_range,  // color outside M_n
};

struct Violation {
    ViolationKind kind;
    EdgeId edge;      // offending edge, or -1
    VertexId vertex;  // offending vertex, or -1
    std::string message;
};

struct VerificationReport {
    bool valid;
    std::vector<Violation> violations;
};

// Checks the three defining conditions of a proper incidence coloring:
// edge constraint, per-vertex properness, colors within M_n. The coloring
// must cover exactly the incidences of sg (DomainMismatch otherwise).
VerificationReport verify_coloring(const SignedGraph& sg, const IncidenceColoring& c);

}  // namespace sgc
