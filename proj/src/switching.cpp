#include "sgcolor/switching.hpp"

#include <algorithm>
#include <string>

namespace sgc {

SwitchSet make_switch_set(const Graph& g, std::vector<VertexId> vertices) {
    for (VertexId v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::vertex_out_of_range,
                        "switch set vertex " + std::to_string(v) + " out of range");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return {std::move(vertices)};
}

SwitchSet canonical_switch_set(const Graph& g, const SwitchSet& s) {
    auto comp = g.component_ids();
    int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : s.vertices) in[v] = 1;
    // Lowest vertex of each component decides the kept side.
    std::vector<char> flip(nc, 0);
    std::vector<char> decided(nc, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!decided[comp[v]]) {
            decided[comp[v]] = 1;
            flip[comp[v]] = in[v];
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (in[v] != flip[comp[v]]) out.push_back(v);
    return {std::move(out)};
}

SignedGraph switched(const SignedGraph& sg, const SwitchSet& s) {
    std::vector<char> in(sg.graph.vertex_count(), 0);
    for (VertexId v : s.vertices) {
        if (v < 0 || v >= sg.graph.vertex_count())
            throw Error(Errc::vertex_out_of_range,
                        "switch set vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    std::vector<std::int8_t> signs = sg.signature.signs();
    for (EdgeId e = 0; e < sg.graph.edge_count(); ++e) {
        const auto& [u, v] = sg.graph.edge(e);
        if (in[u] != in[v]) signs[e] = static_cast<std::int8_t>(-signs[e]);
    }
    return {sg.graph, Signature(std::move(signs))};
}

std::optional<std::vector<std::int8_t>> balance_potentials(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    std::vector<std::int8_t> p(g.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (p[s] != 0) continue;
        p[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                std::int8_t want = static_cast<std::int8_t>(p[v] * sg.signature.sign(e));
                if (p[w] == 0) {
                    p[w] = want;
                    stack.push_back(w);
                } else if (p[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return p;
}

bool is_balanced(const SignedGraph& sg) { return balance_potentials(sg).has_value(); }

int cycle_sign(const SignedGraph& sg, std::span<const VertexId> cycle) {
    if (cycle.size() < 3)
        throw Error(Errc::not_a_cycle, "cycle needs at least 3 vertices");
    std::vector<VertexId> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::not_a_cycle, "cycle repeats a vertex");
    int prod = 1;
    for (size_t i = 0; i < cycle.size(); ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        auto e = sg.graph.find_edge(a, b);
        if (!e)
            throw Error(Errc::not_a_cycle,
                        "no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        prod *= sg.signature.sign(*e);
    }
    return prod;
}

std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (!(a.graph == b.graph))
        throw Error(Errc::underlying_graph_mismatch,
                    "signed graphs live on different underlying graphs");
    // a and b differ by a switch iff the product signature is balanced; the
    // negative side of its potentials is the switch set.
    std::vector<std::int8_t> prod(a.graph.edge_count());
    for (EdgeId e = 0; e < a.graph.edge_count(); ++e)
        prod[e] = static_cast<std::int8_t>(a.signature.sign(e) * b.signature.sign(e));
    auto pots = balance_potentials({a.graph, Signature(std::move(prod))});
    if (!pots) return std::nullopt;
    std::vector<VertexId> neg;
    for (VertexId v = 0; v < a.graph.vertex_count(); ++v)
        if ((*pots)[v] == -1) neg.push_back(v);
    return canonical_switch_set(a.graph, {std::move(neg)});
}

IncidenceColoring transport_coloring(const Graph& g, IncidenceColoring c, const SwitchSet& s) {
    if (c.edge_count() != g.edge_count())
        throw Error(Errc::domain_mismatch, "coloring does not match graph");
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : s.vertices) in[v] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        if (in[u] && c.side(e, 0) != IncidenceColoring::kUnset) c.set_side(e, 0, -c.side(e, 0));
        if (in[v] && c.side(e, 1) != IncidenceColoring::kUnset) c.set_side(e, 1, -c.side(e, 1));
    }
    return c;
}

SwitchingClassRepresentatives::SwitchingClassRepresentatives(const Graph& g)
    : edge_count_(g.edge_count()) {
    // BFS spanning forest; everything off the forest is co-tree.
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<char> tree_edge(g.edge_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    tree_edge[e] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!tree_edge[e]) cotree_.push_back(e);
}

std::uint64_t SwitchingClassRepresentatives::count() const {
    if (cotree_.size() >= 63)
        throw Error(Errc::budget_exceeded,
                    "2^" + std::to_string(cotree_.size()) + " switching classes overflow");
    return std::uint64_t{1} << cotree_.size();
}

Signature SwitchingClassRepresentatives::at(std::uint64_t index) const {
    if (index >= count())
        throw Error(Errc::index_out_of_range, "representative index out of range");
    std::vector<std::int8_t> signs(edge_count_, 1);
    for (size_t j = 0; j < cotree_.size(); ++j)
        if ((index >> j) & 1u) signs[cotree_[j]] = -1;
    return Signature(std::move(signs));
}

}  // namespace sgc
