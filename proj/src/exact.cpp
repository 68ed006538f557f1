#include "sgcolor/exact.hpp"

#include <algorithm>
#include <string>

namespace sgc {

namespace {

// Colors packed into bitmask indices: 0 -> 0, +j -> 2j-1, -j -> 2j. Stays
// within n+1 bits for any c in M_n.
int encode_color(int c) { return c > 0 ? 2 * c - 1 : -2 * c; }

class Search {
  public:
    Search(const SignedGraph& sg, int n)
        : g_(sg.graph),
          sig_(sg.signature),
          words_((n + 65) / 64),
          used_(static_cast<size_t>(words_) * g_.vertex_count(), 0),
          col_(n, g_.edge_count()) {
        palette_.reserve(n);
        for (int i = 0; i < n; ++i) palette_.push_back(canonical_color(n, i));
        // The color symmetry group (pair permutations plus per-pair
        // negation) fixes 0 and acts transitively on the rest, so the first
        // branched incidence only needs one candidate per orbit.
        if (n % 2 == 1) {
            first_.push_back(0);
            if (n > 1) first_.push_back(1);
        } else if (n > 0) {
            first_.push_back(1);
        }
        order_.resize(g_.edge_count());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) order_[e] = e;
        auto key = [&](EdgeId e) {
            return std::max(g_.degree(g_.edge(e).u), g_.degree(g_.edge(e).v));
        };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
    }

    std::optional<IncidenceColoring> run() {
        if (dfs(0)) return std::move(col_);
        return std::nullopt;
    }

  private:
    bool test(VertexId v, int code) const {
        return (used_[static_cast<size_t>(v) * words_ + code / 64] >> (code % 64)) & 1u;
    }
    void flip(VertexId v, int code) {
        used_[static_cast<size_t>(v) * words_ + code / 64] ^= std::uint64_t{1} << (code % 64);
    }

    bool dfs(size_t idx) {
        if (idx == order_.size()) return true;
        EdgeId e = order_[idx];
        const auto& [u, v] = g_.edge(e);
        int s = sig_.sign(e);
        const auto& cands = (idx == 0) ? first_ : palette_;
        for (int cu : cands) {
            int cv = -s * cu;
            int ku = encode_color(cu), kv = encode_color(cv);
            if (test(u, ku) || test(v, kv)) continue;
            flip(u, ku);
            flip(v, kv);
            col_.set_side(e, 0, cu);
            col_.set_side(e, 1, cv);
            if (dfs(idx + 1)) return true;
            flip(u, ku);
            flip(v, kv);
        }
        return false;
    }

    const Graph& g_;
    const Signature& sig_;
    int words_;
    std::vector<std::uint64_t> used_;
    IncidenceColoring col_;
    std::vector<int> palette_;
    std::vector<int> first_;
    std::vector<EdgeId> order_;
};

struct ComponentPiece {
    SignedGraph sub;
    std::vector<EdgeId> edge_map;  // sub edge id -> original edge id
};

// Components that carry at least one edge, with vertices remapped densely.
std::vector<ComponentPiece> edge_components(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    auto comp = g.component_ids();
    int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> vcount(nc, 0), ecount(nc, 0);
    std::vector<int> local(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) local[v] = vcount[comp[v]]++;
    for (EdgeId e = 0; e < g.edge_count(); ++e) ++ecount[comp[g.edge(e).u]];

    std::vector<std::vector<EdgeEnds>> ends(nc);
    std::vector<std::vector<std::int8_t>> signs(nc);
    std::vector<std::vector<EdgeId>> maps(nc);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int c = comp[g.edge(e).u];
        ends[c].push_back({local[g.edge(e).u], local[g.edge(e).v]});
        signs[c].push_back(static_cast<std::int8_t>(sg.signature.sign(e)));
        maps[c].push_back(e);
    }
    std::vector<ComponentPiece> out;
    for (int c = 0; c < nc; ++c) {
        if (ecount[c] == 0) continue;
        out.push_back({SignedGraph(Graph(vcount[c], std::move(ends[c])),
                                   Signature(std::move(signs[c]))),
                       std::move(maps[c])});
    }
    return out;
}

void check_budget(const Graph& g, const SolveOptions& opts) {
    if (g.edge_count() > opts.max_edges && !opts.force)
        throw Error(Errc::budget_exceeded,
                    "graph has " + std::to_string(g.edge_count()) + " edges, over the " +
                        std::to_string(opts.max_edges) + "-edge search budget (force to override)");
}

std::optional<IncidenceColoring> solve_connected(const SignedGraph& sg, int n) {
    if (max_degree(sg.graph) > n) return std::nullopt;
    return Search(sg, n).run();
}

// Balance of the subgraph carrying only the given edges.
bool balanced_on_edges(const SignedGraph& sg, const std::vector<EdgeId>& edges) {
    const Graph& g = sg.graph;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
    for (EdgeId e : edges) {
        adj[g.edge(e).u].push_back({g.edge(e).v, e});
        adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::vector<std::int8_t> p(g.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (EdgeId start : edges) {
        for (VertexId s : {g.edge(start).u, g.edge(start).v}) {
            if (p[s] != 0) continue;
            p[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[v]) {
                    std::int8_t want = static_cast<std::int8_t>(p[v] * sg.signature.sign(e));
                    if (p[w] == 0) {
                        p[w] = want;
                        stack.push_back(w);
                    } else if (p[w] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

std::optional<IncidenceColoring> try_color_with(const SignedGraph& sg, int n_colors,
                                                const SolveOptions& opts) {
    check_budget(sg.graph, opts);
    if (n_colors < 0) throw Error(Errc::invalid_argument, "negative color count");
    if (sg.graph.edge_count() == 0) return IncidenceColoring(n_colors, 0);
    if (max_degree(sg.graph) > n_colors) return std::nullopt;
    if (sg.graph.connected()) return solve_connected(sg, n_colors);

    IncidenceColoring merged(n_colors, sg.graph.edge_count());
    for (const auto& piece : edge_components(sg)) {
        auto sub = solve_connected(piece.sub, n_colors);
        if (!sub) return std::nullopt;
        for (size_t j = 0; j < piece.edge_map.size(); ++j) {
            merged.set_side(piece.edge_map[j], 0, sub->side(static_cast<EdgeId>(j), 0));
            merged.set_side(piece.edge_map[j], 1, sub->side(static_cast<EdgeId>(j), 1));
        }
    }
    return merged;
}

ChromaticResult exact_chromatic_index(const SignedGraph& sg, const SolveOptions& opts) {
    check_budget(sg.graph, opts);
    int m = sg.graph.edge_count();
    int delta = max_degree(sg.graph);
    if (delta == 0) return {0, 0, IncidenceColoring(0, m)};

    auto pieces = edge_components(sg);
    int chi = 0;
    std::vector<int> piece_chi(pieces.size());
    std::vector<std::optional<IncidenceColoring>> sols(pieces.size());
    for (size_t i = 0; i < pieces.size(); ++i) {
        int d = max_degree(pieces[i].sub.graph);
        sols[i] = solve_connected(pieces[i].sub, d);
        piece_chi[i] = d;
        if (!sols[i]) {
            sols[i] = solve_connected(pieces[i].sub, d + 1);
            piece_chi[i] = d + 1;
            if (!sols[i])
                throw Error(Errc::internal_error,
                            "component not colorable with Delta+1 colors; solver bounds violated");
        }
        chi = std::max(chi, piece_chi[i]);
    }
    // Colorability is monotone above each component's chromatic index, so
    // lagging components recolor cleanly at the joint count.
    IncidenceColoring witness(chi, m);
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (piece_chi[i] < chi) {
            sols[i] = solve_connected(pieces[i].sub, chi);
            if (!sols[i])
                throw Error(Errc::internal_error, "component recolor at joint count failed");
        }
        for (size_t j = 0; j < pieces[i].edge_map.size(); ++j) {
            witness.set_side(pieces[i].edge_map[j], 0, sols[i]->side(static_cast<EdgeId>(j), 0));
            witness.set_side(pieces[i].edge_map[j], 1, sols[i]->side(static_cast<EdgeId>(j), 1));
        }
    }
    if (chi < delta || chi > delta + 1)
        throw Error(Errc::internal_error, "chromatic index outside [Delta, Delta+1]");
    return {delta, chi, std::move(witness)};
}

bool verify_regular_decomposition(const SignedGraph& sg, const Decomposition& d) {
    const Graph& g = sg.graph;
    int k = g.degree(0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k)
            throw Error(Errc::not_regular, "graph is not regular");

    std::vector<int> covered(g.edge_count(), 0);
    int matchings = 0, two_regulars = 0;
    for (const auto& part : d.parts) {
        if (part.kind == PartKind::matching)
            ++matchings;
        else if (part.kind == PartKind::two_regular_spanning)
            ++two_regulars;
        else
            return false;
        for (EdgeId e : part.edges) {
            if (e < 0 || e >= g.edge_count()) return false;
            ++covered[e];
        }
    }
    for (int c : covered)
        if (c != 1) return false;

    if (k % 2 == 0) {
        if (matchings != 0 || two_regulars != k / 2) return false;
    } else {
        if (matchings != 1 || two_regulars != (k - 1) / 2) return false;
    }

    std::vector<int> deg(g.vertex_count());
    for (const auto& part : d.parts) {
        std::fill(deg.begin(), deg.end(), 0);
        for (EdgeId e : part.edges) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        int want = part.kind == PartKind::matching ? 1 : 2;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (deg[v] != want) return false;
        if (part.kind == PartKind::two_regular_spanning && !balanced_on_edges(sg, part.edges))
            return false;
    }
    return true;
}

Decomposition extract_decomposition(const SignedGraph& sg, const IncidenceColoring& c) {
    const Graph& g = sg.graph;
    int delta = max_degree(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != delta)
            throw Error(Errc::not_regular, "decomposition extraction needs a regular graph");
    if (c.n_colors() != delta)
        throw Error(Errc::invalid_coloring, "coloring does not use exactly Delta colors");
    auto rep = verify_coloring(sg, c);
    if (!rep.valid)
        throw Error(Errc::invalid_coloring, "coloring fails verification: " +
                                                (rep.violations.empty()
                                                     ? std::string("unknown")
                                                     : rep.violations.front().message));

    Decomposition d;
    int pairs = delta / 2;
    for (int j = 1; j <= pairs; ++j) d.parts.push_back({PartKind::two_regular_spanning, {}});
    int matching_part = -1;
    if (delta % 2 == 1) {
        d.parts.push_back({PartKind::matching, {}});
        matching_part = pairs;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int mag = std::abs(c.side(e, 0));
        if (mag == 0)
            d.parts[matching_part].edges.push_back(e);
        else
            d.parts[mag - 1].edges.push_back(e);
    }
    if (!verify_regular_decomposition(sg, d))
        throw Error(Errc::internal_error, "extracted decomposition failed structural checks");
    return d;
}

IncidenceColoring color_from_decomposition(const SignedGraph& sg, const Decomposition& d) {
    const Graph& g = sg.graph;
    std::vector<int> covered(g.edge_count(), 0);
    int pair_parts = 0, matchings = 0;
    for (const auto& part : d.parts) {
        if (part.kind == PartKind::matching)
            ++matchings;
        else
            ++pair_parts;
        for (EdgeId e : part.edges) {
            if (e < 0 || e >= g.edge_count())
                throw Error(Errc::invalid_decomposition, "part references unknown edge");
            ++covered[e];
        }
    }
    if (matchings > 1)
        throw Error(Errc::invalid_decomposition, "more than one matching part");
    for (int cnt : covered)
        if (cnt != 1)
            throw Error(Errc::invalid_decomposition, "parts do not partition the edge set");

    int n = 2 * pair_parts + (matchings > 0 ? 1 : 0);
    IncidenceColoring col(n, g.edge_count());

    int next_pair = 1;
    for (const auto& part : d.parts) {
        if (part.kind == PartKind::matching) {
            std::vector<char> touched(g.vertex_count(), 0);
            for (EdgeId e : part.edges) {
                for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
                    if (touched[v])
                        throw Error(Errc::invalid_decomposition,
                                    "matching part repeats vertex " + std::to_string(v));
                    touched[v] = 1;
                }
                col.set_side(e, 0, 0);
                col.set_side(e, 1, 0);
            }
            continue;
        }

        // Pair parts: every component must be a simple path or cycle; walk
        // it, flipping the pair element at every interior vertex.
        int a = next_pair++;
        std::unordered_map<VertexId, std::vector<EdgeId>> adj;
        for (EdgeId e : part.edges) {
            adj[g.edge(e).u].push_back(e);
            adj[g.edge(e).v].push_back(e);
        }
        for (const auto& [v, es] : adj)
            if (es.size() > 2)
                throw Error(Errc::invalid_decomposition,
                            "pair part has three edges at vertex " + std::to_string(v));

        std::unordered_map<EdgeId, char> used;
        for (EdgeId e : part.edges) used[e] = 0;

        auto walk_from = [&](VertexId start) {
            int carry = a;
            VertexId cur = start;
            while (true) {
                EdgeId step = -1;
                for (EdgeId e : adj[cur])
                    if (!used[e]) { step = e; break; }
                if (step == -1) break;
                used[step] = 1;
                VertexId nxt = g.other_end(step, cur);
                col.set(g, cur, step, carry);
                int far = -sg.signature.sign(step) * carry;
                col.set(g, nxt, step, far);
                carry = -far;
                cur = nxt;
            }
        };

        // Path components first (walks that start at degree-1 vertices), then
        // whatever remains is a union of cycles.
        for (const auto& [v, es] : adj)
            if (es.size() == 1 && !used[es[0]]) walk_from(v);
        for (EdgeId e : part.edges)
            if (!used[e]) walk_from(g.edge(e).u);
    }

    auto rep = verify_coloring(sg, col);
    if (!rep.valid)
        throw Error(Errc::invalid_decomposition,
                    "decomposition does not assemble into a proper coloring: " +
                        rep.violations.front().message);
    return col;
}

}  // namespace sgc
