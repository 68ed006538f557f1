#include "sgcolor/core.hpp"

#include <algorithm>
#include <string>

namespace sgc {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::self_loop: return "SelfLoop";
        case Errc::vertex_out_of_range: return "VertexOutOfRange";
        case Errc::domain_mismatch: return "DomainMismatch";
        case Errc::not_a_cycle: return "NotACycle";
        case Errc::underlying_graph_mismatch: return "UnderlyingGraphMismatch";
        case Errc::not_regular: return "NotRegular";
        case Errc::invalid_coloring: return "InvalidColoring";
        case Errc::invalid_decomposition: return "InvalidDecomposition";
        case Errc::not_a_path: return "NotAPath";
        case Errc::anchor_not_in_pair: return "AnchorNotInPair";
        case Errc::not_a_cactus: return "NotACactus";
        case Errc::is_a_cycle: return "IsACycle";
        case Errc::disconnected: return "Disconnected";
        case Errc::not_a_wheel: return "NotAWheel";
        case Errc::not_a_necklace: return "NotANecklace";
        case Errc::not_complete_bipartite: return "NotCompleteBipartite";
        case Errc::equal_parts: return "EqualParts";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::invalid_spec: return "InvalidSpec";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::header_mismatch: return "HeaderMismatch";
        case Errc::bad_sign: return "BadSign";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::internal_error: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

Graph::Graph(int vertex_count, std::vector<EdgeEnds> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
        throw Error(Errc::invalid_argument, "vertex count must be positive");
    edge_lookup_.reserve(edges_.size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        const auto& [u, v] = edges_[e];
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw Error(Errc::self_loop,
                        "self-loop at vertex " + std::to_string(u) + " (edge " +
                            std::to_string(e) + ")");
        auto [it, fresh] = edge_lookup_.emplace(edge_key(u, v), e);
        if (!fresh)
            throw Error(Errc::duplicate_edge,
                        "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} (edges " + std::to_string(it->second) + " and " +
                            std::to_string(e) + ")");
    }
    // CSR incidence lists.
    inc_offsets_.assign(vertex_count_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++inc_offsets_[u + 1];
        ++inc_offsets_[v + 1];
    }
    for (int i = 0; i < vertex_count_; ++i) inc_offsets_[i + 1] += inc_offsets_[i];
    inc_edges_.resize(2 * edges_.size());
    std::vector<int> cursor(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        inc_edges_[cursor[edges_[e].u]++] = e;
        inc_edges_[cursor[edges_[e].v]++] = e;
    }
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count_)
        throw Error(Errc::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(vertex_count_ - 1) + "]");
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
    check_vertex(v);
    return {inc_edges_.data() + inc_offsets_[v],
            inc_edges_.data() + inc_offsets_[v + 1]};
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return inc_offsets_[v + 1] - inc_offsets_[v];
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
    const auto& ends = edges_[e];
    if (ends.u == v) return ends.v;
    if (ends.v == v) return ends.u;
    throw Error(Errc::invalid_argument,
                "vertex " + std::to_string(v) + " is not an endpoint of edge " +
                    std::to_string(e));
}

bool Graph::is_endpoint(VertexId v, EdgeId e) const {
    return edges_[e].u == v || edges_[e].v == v;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = edge_lookup_.find(edge_key(u, v));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(vertex_count_, -1);
    std::vector<VertexId> stack;
    int next = 0;
    for (VertexId s = 0; s < vertex_count_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : incident_edges(v)) {
                VertexId w = other_end(e, v);
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Signature::Signature(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    for (auto s : signs_)
        if (s != 1 && s != -1)
            throw Error(Errc::bad_sign, "signature entries must be +1 or -1");
}

int Signature::negative_count() const {
    int n = 0;
    for (auto s : signs_) n += (s == -1);
    return n;
}

SignedGraph::SignedGraph(Graph g, Signature s) : graph(std::move(g)), signature(std::move(s)) {
    if (signature.size() != graph.edge_count())
        throw Error(Errc::domain_mismatch,
                    "signature covers " + std::to_string(signature.size()) + " edges, graph has " +
                        std::to_string(graph.edge_count()));
}

SignedGraph build_signed_graph(int vertex_count,
                               const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<EdgeEnds> ends;
    std::vector<std::int8_t> signs;
    ends.reserve(edges.size());
    signs.reserve(edges.size());
    for (const auto& [u, v, s] : edges) {
        ends.push_back({u, v});
        if (s != 1 && s != -1)
            throw Error(Errc::bad_sign, "edge sign must be +1 or -1, got " + std::to_string(s));
        signs.push_back(static_cast<std::int8_t>(s));
    }
    return {Graph(vertex_count, std::move(ends)), Signature(std::move(signs))};
}

Signature signature_from_index(int edge_count, std::uint64_t index) {
    if (edge_count < 0 || edge_count > 64)
        throw Error(Errc::invalid_argument, "index signatures support at most 64 edges");
    if (edge_count < 64 && (index >> edge_count) != 0)
        throw Error(Errc::index_out_of_range,
                    "signature index " + std::to_string(index) + " has bits beyond edge " +
                        std::to_string(edge_count - 1));
    std::vector<std::int8_t> signs(edge_count, 1);
    for (int e = 0; e < edge_count; ++e)
        if ((index >> e) & 1) signs[e] = -1;
    return Signature(std::move(signs));
}

ColorSet ColorSet::of(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "color set size must be positive");
    return {n};
}

std::vector<int> ColorSet::members() const {
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(canonical_color(n, i));
    return out;
}

bool ColorSet::contains(int c) const { return color_in_set(n, c); }

bool color_in_set(int n, int c) {
    if (n <= 0) return false;
    int k = n / 2;
    if (n % 2 == 1) return c >= -k && c <= k;
    return c != 0 && c >= -k && c <= k;
}

int canonical_color(int n, int i) {
    // Odd n: 0, 1, -1, 2, -2, ...   Even n: 1, -1, 2, -2, ...
    if (n % 2 == 1) {
        if (i == 0) return 0;
        int j = (i + 1) / 2;
        return (i % 2 == 1) ? j : -j;
    }
    int j = i / 2 + 1;
    return (i % 2 == 0) ? j : -j;
}

IncidenceColoring::IncidenceColoring(int n_colors, int edge_count)
    : n_colors_(n_colors), slots_(edge_count, {kUnset, kUnset}) {
    if (n_colors < 0) throw Error(Errc::invalid_argument, "negative color count");
}

int IncidenceColoring::at(const Graph& g, VertexId v, EdgeId e) const {
    const auto& ends = g.edge(e);
    if (ends.u == v) return slots_[e][0];
    if (ends.v == v) return slots_[e][1];
    throw Error(Errc::domain_mismatch,
                "(" + std::to_string(v) + "," + std::to_string(e) + ") is not an incidence");
}

void IncidenceColoring::set(const Graph& g, VertexId v, EdgeId e, int c) {
    const auto& ends = g.edge(e);
    if (ends.u == v)
        slots_[e][0] = c;
    else if (ends.v == v)
        slots_[e][1] = c;
    else
        throw Error(Errc::domain_mismatch,
                    "(" + std::to_string(v) + "," + std::to_string(e) + ") is not an incidence");
}

bool IncidenceColoring::complete() const {
    for (const auto& s : slots_)
        if (s[0] == kUnset || s[1] == kUnset) return false;
    return true;
}

VerificationReport verify_coloring(const SignedGraph& sg, const IncidenceColoring& c) {
    const Graph& g = sg.graph;
    if (c.edge_count() != g.edge_count())
        throw Error(Errc::domain_mismatch,
                    "coloring covers " + std::to_string(c.edge_count()) + " edges, graph has " +
                        std::to_string(g.edge_count()));
    if (!c.complete())
        throw Error(Errc::domain_mismatch, "coloring leaves incidences unassigned");

    VerificationReport rep{true, {}};
    auto flag = [&](ViolationKind kind, EdgeId e, VertexId v, std::string msg) {
        rep.valid = false;
        rep.violations.push_back({kind, e, v, std::move(msg)});
    };

    int n = c.n_colors();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int cu = c.side(e, 0), cv = c.side(e, 1);
        for (int s = 0; s < 2; ++s) {
            int col = c.side(e, s);
            if (!color_in_set(n, col))
                flag(ViolationKind::color_out_of_range, e,
                     s == 0 ? g.edge(e).u : g.edge(e).v,
                     "color " + std::to_string(col) + " not in M_" + std::to_string(n));
        }
        if (cu != -sg.signature.sign(e) * cv)
            flag(ViolationKind::edge_constraint, e, -1,
                 "edge " + std::to_string(e) + ": f(u)=" + std::to_string(cu) +
                     " != -sigma*f(v)=" + std::to_string(-sg.signature.sign(e) * cv));
    }
    std::vector<int> seen;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (EdgeId e : g.incident_edges(v)) seen.push_back(c.at(g, v, e));
        std::sort(seen.begin(), seen.end());
        for (size_t i = 1; i < seen.size(); ++i)
            if (seen[i] == seen[i - 1])
                flag(ViolationKind::vertex_properness, -1, v,
                     "vertex " + std::to_string(v) + " repeats color " +
                         std::to_string(seen[i]));
    }
    return rep;
}

}  // namespace sgc
