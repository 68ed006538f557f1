#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgcolor/core.hpp"

namespace sgc {

// Vertex set used for switching, kept sorted and duplicate-free. Switching by
// S and by V\S (per component) produce the same signature, so witnesses are
// canonicalized to the side NOT containing the lowest vertex of each
// component.
struct SwitchSet {
    std::vector<VertexId> vertices;

    bool operator==(const SwitchSet&) const = default;
};

SwitchSet make_switch_set(const Graph& g, std::vector<VertexId> vertices);
SwitchSet canonical_switch_set(const Graph& g, const SwitchSet& s);

// Negates the sign of every edge with exactly one endpoint in s.
SignedGraph switched(const SignedGraph& sg, const SwitchSet& s);

// Vertex potentials p with sigma(uv) = p(u)*p(v) for every edge; engaged iff
// the signed graph is balanced (every cycle positive). p is +1 on the lowest
// vertex of each component.
std::optional<std::vector<std::int8_t>> balance_potentials(const SignedGraph& sg);

bool is_balanced(const SignedGraph& sg);

// Product of edge signs along the cycle given as a vertex sequence
// (closing edge implied). Switching-invariant.
int cycle_sign(const SignedGraph& sg, std::span<const VertexId> cycle);

// If a and b differ by a switch, returns the canonical witness set; nullopt
// otherwise. Both must share the identical underlying graph.
std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Transports a coloring across a switch: negates every incidence color at
// vertices of s. Valid colorings of sg map to valid colorings of
// switched(sg, s) with the same color count.
IncidenceColoring transport_coloring(const Graph& g, IncidenceColoring c, const SwitchSet& s);

// One signature per switching class: spanning-forest edges fixed to +1, the
// m-n+c co-tree edges run through all sign patterns. Random access by index
// makes sweeps trivially partitionable.
class SwitchingClassRepresentatives {
  public:
    explicit SwitchingClassRepresentatives(const Graph& g);

    int cotree_edge_count() const { return static_cast<int>(cotree_.size()); }
    std::uint64_t count() const;
    Signature at(std::uint64_t index) const;

  private:
    int edge_count_;
    std::vector<EdgeId> cotree_;
};

}  // namespace sgc
