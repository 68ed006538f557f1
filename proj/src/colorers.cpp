#include "sgcolor/colorers.hpp"

#include <algorithm>
#include <string>

namespace sgc {

namespace {

// Core propagation: walk the edge list from `start`, color the near incidence
// of the first edge with `anchor`, force each far side via f(far) =
// -sigma * f(near), and enter the next edge with the opposite pair element.
// Assumes the edges really chain together; throws otherwise.
void chain_paint(const SignedGraph& sg, std::span<const EdgeId> edges, VertexId start,
                 int anchor, IncidenceColoring& col) {
    VertexId cur = start;
    int carry = anchor;
    for (EdgeId e : edges) {
        if (!sg.graph.is_endpoint(cur, e))
            throw Error(Errc::not_a_path, "edge " + std::to_string(e) +
                                              " does not continue the walk at vertex " +
                                              std::to_string(cur));
        VertexId nxt = sg.graph.other_end(e, cur);
        col.set(sg.graph, cur, e, carry);
        int far = -sg.signature.sign(e) * carry;
        col.set(sg.graph, nxt, e, far);
        carry = -far;
        cur = nxt;
    }
}

void paint_edge(const SignedGraph& sg, EdgeId e, VertexId near, int color_near,
                IncidenceColoring& col) {
    col.set(sg.graph, near, e, color_near);
    col.set(sg.graph, sg.graph.other_end(e, near), e,
            -sg.signature.sign(e) * color_near);
}

bool is_cycle_graph(const Graph& g) {
    if (g.edge_count() != g.vertex_count() || g.edge_count() < 3) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return g.connected();
}

// Cyclic walk of a 2-regular connected graph starting at `start`, first step
// along its lowest-id incident edge. Returns vertices and edges in step
// order; edges[i] joins vertices[i] and vertices[i+1 mod L].
void walk_cycle(const Graph& g, VertexId start,
                std::vector<VertexId>& vertices, std::vector<EdgeId>& edges) {
    vertices.clear();
    edges.clear();
    VertexId cur = start;
    EdgeId prev = -1;
    do {
        vertices.push_back(cur);
        EdgeId step = -1;
        for (EdgeId e : g.incident_edges(cur))
            if (e != prev && (step == -1 || e < step)) step = e;
        edges.push_back(step);
        cur = g.other_end(step, cur);
        prev = step;
    } while (cur != start);
}

}  // namespace

IncidenceColoring color_path(const SignedGraph& sg, std::span<const EdgeId> path_edges,
                             VertexId start, int pair, std::optional<int> anchor,
                             int n_colors) {
    const Graph& g = sg.graph;
    if (path_edges.empty())
        throw Error(Errc::not_a_path, "empty edge list");
    if (pair == 0 && path_edges.size() > 1)
        throw Error(Errc::invalid_argument, "pair {0} only colors a single edge");
    if (!color_in_set(n_colors, pair))
        throw Error(Errc::invalid_argument,
                    "pair color " + std::to_string(pair) + " not in M_" + std::to_string(n_colors));
    int a = anchor.value_or(pair);
    if (a != pair && a != -pair)
        throw Error(Errc::anchor_not_in_pair,
                    "anchor " + std::to_string(a) + " not in {" + std::to_string(pair) + "," +
                        std::to_string(-pair) + "}");

    // Path shape: consecutive edges share a vertex, no vertex repeats.
    if (start < 0 || start >= g.vertex_count())
        throw Error(Errc::vertex_out_of_range, "start vertex " + std::to_string(start));
    std::vector<char> seen(g.vertex_count(), 0);
    seen[start] = 1;
    VertexId cur = start;
    for (EdgeId e : path_edges) {
        if (e < 0 || e >= g.edge_count())
            throw Error(Errc::not_a_path, "unknown edge " + std::to_string(e));
        if (!g.is_endpoint(cur, e))
            throw Error(Errc::not_a_path,
                        "edge " + std::to_string(e) + " does not extend the path at vertex " +
                            std::to_string(cur));
        cur = g.other_end(e, cur);
        if (seen[cur])
            throw Error(Errc::not_a_path, "path revisits vertex " + std::to_string(cur));
        seen[cur] = 1;
    }

    IncidenceColoring col(n_colors, g.edge_count());
    chain_paint(sg, path_edges, start, a, col);
    return col;
}

IncidenceColoring color_cycle(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    if (!is_cycle_graph(g))
        throw Error(Errc::not_a_cycle, "graph is not a single cycle");
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    walk_cycle(g, 0, vs, es);

    int prod = 1;
    for (EdgeId e : es) prod *= sg.signature.sign(e);
    if (prod == 1) {
        IncidenceColoring col(2, g.edge_count());
        chain_paint(sg, es, vs[0], 1, col);
        return col;
    }
    // Unbalanced: one edge takes {0,0}, the rest is a {+-1} path.
    IncidenceColoring col(3, g.edge_count());
    paint_edge(sg, es[0], vs[0], 0, col);
    std::vector<EdgeId> rest(es.begin() + 1, es.end());
    chain_paint(sg, rest, vs[1], 1, col);
    return col;
}

CactusDecomposition decompose_cactus(const Graph& g) {
    if (!g.connected())
        throw Error(Errc::disconnected, "cactus decomposition needs a connected graph");
    CactusDecomposition out;
    if (g.edge_count() == 0) return out;

    // Iterative biconnected-components DFS; each popped block must be a
    // bridge or a cycle.
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> estack;
    struct Frame {
        VertexId v;
        EdgeId pe;
        size_t i;
    };
    std::vector<Frame> fstack;
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> blocks;  // (attach, edges), pop order
    int timer = 0;
    disc[0] = low[0] = ++timer;
    fstack.push_back({0, -1, 0});
    while (!fstack.empty()) {
        Frame& f = fstack.back();
        auto inc = g.incident_edges(f.v);
        if (f.i < inc.size()) {
            EdgeId e = inc[f.i++];
            if (e == f.pe) continue;
            VertexId w = g.other_end(e, f.v);
            if (disc[w] == -1) {
                estack.push_back(e);
                disc[w] = low[w] = ++timer;
                fstack.push_back({w, e, 0});
            } else if (disc[w] < disc[f.v]) {
                estack.push_back(e);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            Frame done = f;
            fstack.pop_back();
            if (fstack.empty()) continue;
            Frame& pf = fstack.back();
            low[pf.v] = std::min(low[pf.v], low[done.v]);
            if (low[done.v] >= disc[pf.v]) {
                std::vector<EdgeId> block;
                while (true) {
                    EdgeId e = estack.back();
                    estack.pop_back();
                    block.push_back(e);
                    if (e == done.pe) break;
                }
                blocks.emplace_back(pf.v, std::move(block));
            }
        }
    }
    if (!estack.empty())
        throw Error(Errc::internal_error, "block decomposition left edges unassigned");

    // Pop order is children-before-parents; reversed, every block's attach
    // vertex already sits in the prefix.
    std::reverse(blocks.begin(), blocks.end());
    out.parts.reserve(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
        VertexId attach = b == 0 ? -1 : blocks[b].first;
        auto& edges = blocks[b].second;
        if (edges.size() == 1) {
            EdgeId e = edges[0];
            VertexId a = b == 0 ? g.edge(e).u : attach;
            out.parts.push_back({false, {e}, {a, g.other_end(e, a)}, attach});
            continue;
        }
        // Larger blocks must be plain cycles: as many vertices as edges,
        // every block vertex on exactly two block edges.
        std::vector<std::pair<VertexId, int>> deg;  // sparse block degrees
        auto bump = [&](VertexId v) {
            for (auto& [u, d] : deg)
                if (u == v) {
                    ++d;
                    return;
                }
            deg.push_back({v, 1});
        };
        for (EdgeId e : edges) {
            bump(g.edge(e).u);
            bump(g.edge(e).v);
        }
        if (deg.size() != edges.size())
            throw Error(Errc::not_a_cactus,
                        "block with " + std::to_string(edges.size()) + " edges on " +
                            std::to_string(deg.size()) + " vertices");
        for (auto& [v, d] : deg)
            if (d != 2)
                throw Error(Errc::not_a_cactus,
                            "two cycles share edge(s) at vertex " + std::to_string(v));

        VertexId start = attach;
        if (b == 0) {
            start = deg[0].first;
            for (auto& [v, d] : deg) start = std::min(start, v);
        }
        // Walk the cycle within the block's edges only.
        std::vector<VertexId> vs;
        std::vector<EdgeId> ces;
        std::vector<char> used(edges.size(), 0);
        VertexId cur = start;
        for (size_t step = 0; step < edges.size(); ++step) {
            vs.push_back(cur);
            EdgeId next = -1;
            size_t next_i = 0;
            for (size_t i = 0; i < edges.size(); ++i) {
                if (used[i] || !g.is_endpoint(cur, edges[i])) continue;
                if (next == -1 || edges[i] < next) {
                    next = edges[i];
                    next_i = i;
                }
            }
            if (next == -1)
                throw Error(Errc::internal_error, "cycle walk stalled");
            used[next_i] = 1;
            ces.push_back(next);
            cur = g.other_end(next, cur);
        }
        if (cur != start)
            throw Error(Errc::internal_error, "cycle walk did not close");
        out.parts.push_back({true, std::move(ces), std::move(vs), attach});
    }
    return out;
}

IncidenceColoring color_cactus(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    auto dec = decompose_cactus(g);  // Disconnected / NotACactus surface here
    int m = g.edge_count();
    if (m == 0) return IncidenceColoring(0, 0);
    if (dec.parts.size() == 1 && dec.parts[0].is_cycle)
        throw Error(Errc::is_a_cycle, "cactus colorer does not handle plain cycles");

    int delta = max_degree(g);
    if (delta == 1) {
        IncidenceColoring col(1, m);
        paint_edge(sg, 0, g.edge(0).u, 0, col);
        return col;
    }
    if (delta == 2) {
        // Not a cycle, so the graph is a path: walk it from a leaf.
        VertexId leaf = -1;
        for (VertexId v = 0; v < g.vertex_count() && leaf == -1; ++v)
            if (g.degree(v) == 1) leaf = v;
        std::vector<EdgeId> es;
        VertexId cur = leaf;
        EdgeId prev = -1;
        while (true) {
            EdgeId step = -1;
            for (EdgeId e : g.incident_edges(cur))
                if (e != prev) step = e;
            if (step == -1) break;
            es.push_back(step);
            prev = step;
            cur = g.other_end(step, cur);
        }
        IncidenceColoring col(2, m);
        chain_paint(sg, es, leaf, 1, col);
        return col;
    }

    IncidenceColoring col(delta, m);
    // Free-color queries in canonical order, O(deg) each via an epoch-stamped
    // scratch table indexed by packed color codes.
    std::vector<std::vector<int>> used_at(g.vertex_count());
    std::vector<int> stamp(2 * (delta / 2) + 2, 0);
    int epoch = 0;
    auto code_of = [](int c) { return c > 0 ? 2 * c - 1 : -2 * c; };
    auto note = [&](VertexId v, EdgeId e, int c) {
        col.set(g, v, e, c);
        used_at[v].push_back(c);
    };
    auto note_edge = [&](EdgeId e, VertexId near, int cnear) {
        note(near, e, cnear);
        note(g.other_end(e, near), e, -sg.signature.sign(e) * cnear);
    };
    auto note_chain = [&](std::span<const EdgeId> edges, VertexId start, int anchor) {
        VertexId cur = start;
        int carry = anchor;
        for (EdgeId e : edges) {
            VertexId nxt = g.other_end(e, cur);
            note(cur, e, carry);
            int far = -sg.signature.sign(e) * carry;
            note(nxt, e, far);
            carry = -far;
            cur = nxt;
        }
    };
    auto free_colors = [&](VertexId v, int want) {
        ++epoch;
        for (int c : used_at[v]) stamp[code_of(c)] = epoch;
        std::vector<int> out;
        for (int i = 0; i < delta && static_cast<int>(out.size()) < want; ++i) {
            int c = canonical_color(delta, i);
            if (stamp[code_of(c)] != epoch) out.push_back(c);
        }
        if (static_cast<int>(out.size()) < want)
            throw Error(Errc::internal_error, "no free color at attach vertex");
        return out;
    };

    for (size_t pi = 0; pi < dec.parts.size(); ++pi) {
        const CactusPart& part = dec.parts[pi];
        if (pi == 0) {
            if (!part.is_cycle) {
                note_edge(part.edges[0], part.vertices[0], canonical_color(delta, 0));
                continue;
            }
            int prod = 1;
            for (EdgeId e : part.edges) prod *= sg.signature.sign(e);
            if (prod == 1) {
                note_chain(part.edges, part.vertices[0], 1);
            } else {
                // The off-pair edge takes {0,0} when 0 exists, {+-2} otherwise.
                int x = delta % 2 == 1 ? 0 : 2;
                note_edge(part.edges[0], part.vertices[0], x);
                note_chain(std::span(part.edges).subspan(1), part.vertices[1], 1);
            }
            continue;
        }

        VertexId u = part.attach;
        if (!part.is_cycle) {
            int alpha = free_colors(u, 1)[0];
            note_edge(part.edges[0], u, alpha);
            continue;
        }

        // Cycle hanging off u: vertices[0] == u, edges[0] = u->c1,
        // edges[L-1] = c_{L-1}->u.
        auto two = free_colors(u, 2);
        int alpha = two[0], beta = two[1];
        size_t L = part.edges.size();
        const auto& cv = part.vertices;
        const auto& ce = part.edges;

        if (alpha == -beta) {
            if (delta == 3) {
                // Free pair {+1,-1}: park e1 on {0,0}, the rest is one path
                // through u.
                note_edge(ce[1], cv[1], 0);
                std::vector<EdgeId> chain{ce[0]};
                for (size_t i = L - 1; i >= 2; --i) chain.push_back(ce[i]);
                note_chain(chain, cv[1], alpha);
            } else {
                // Fresh pair for the far arc; u keeps {alpha,-alpha}.
                int gamma = 0;
                for (int i = 0; i < delta; ++i) {
                    int c = canonical_color(delta, i);
                    if (c != 0 && c != alpha && c != -alpha) {
                        gamma = c;
                        break;
                    }
                }
                std::vector<EdgeId> ends{ce[0], ce[L - 1]};
                note_chain(ends, cv[1], alpha);
                std::vector<EdgeId> arc(ce.begin() + 1, ce.end() - 1);
                note_chain(arc, cv[1], gamma);
            }
        } else {
            // alpha != +-beta; beta != 0 since 0 sorts first canonically.
            note_edge(ce[0], u, alpha);
            std::vector<EdgeId> chain;
            for (size_t i = L - 1; i >= 1; --i) chain.push_back(ce[i]);
            note_chain(chain, u, beta);
        }
    }
    return col;
}

WheelStructure recognize_wheel(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4 || g.edge_count() != 2 * (n - 1))
        throw Error(Errc::not_a_wheel, "wrong vertex/edge count for a wheel");

    VertexId hub = -1;
    if (n == 4) {
        for (VertexId v = 0; v < 4; ++v)
            if (g.degree(v) != 3) throw Error(Errc::not_a_wheel, "not K4");
        hub = 0;
    } else {
        for (VertexId v = 0; v < n; ++v) {
            if (g.degree(v) == n - 1) {
                if (hub != -1) throw Error(Errc::not_a_wheel, "two dominating vertices");
                hub = v;
            } else if (g.degree(v) != 3) {
                throw Error(Errc::not_a_wheel,
                            "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)));
            }
        }
        if (hub == -1) throw Error(Errc::not_a_wheel, "no dominating vertex");
    }

    // Rim = the non-hub vertices, which must close into one cycle via
    // non-hub edges.
    std::vector<VertexId> rim;
    VertexId start = hub == 0 ? 1 : 0;
    VertexId cur = start, prev = -1;
    for (int steps = 0; steps < n - 1; ++steps) {
        rim.push_back(cur);
        VertexId nxt = -1;
        for (EdgeId e : g.incident_edges(cur)) {
            VertexId w = g.other_end(e, cur);
            if (w == hub || w == prev) continue;
            if (nxt != -1 && w != nxt && steps > 0)
                throw Error(Errc::not_a_wheel, "rim branches");
            if (nxt == -1) nxt = w;
        }
        if (nxt == -1) throw Error(Errc::not_a_wheel, "rim walk stalled");
        prev = cur;
        cur = nxt;
    }
    if (cur != start || static_cast<int>(rim.size()) != n - 1)
        throw Error(Errc::not_a_wheel, "rim does not close into one cycle");
    return {hub, std::move(rim)};
}

Decomposition wheel_decomposition(const SignedGraph& sg, const WheelStructure& ws) {
    const Graph& g = sg.graph;
    int n = g.vertex_count();
    int R = n - 1;
    auto spoke = [&](int i) { return *g.find_edge(ws.hub, ws.rim[i]); };
    auto rim_edge = [&](int i) { return *g.find_edge(ws.rim[i], ws.rim[(i + 1) % R]); };

    Decomposition d;
    if (n == 4) {
        // Three perfect matchings; pick one whose negative count has the same
        // parity as the whole signature, leaving a balanced 4-cycle.
        int total = sg.signature.negative_count() % 2;
        for (int i = 0; i < 3; ++i) {
            EdgeId m1 = spoke(i);
            EdgeId m2 = *g.find_edge(ws.rim[(i + 1) % 3], ws.rim[(i + 2) % 3]);
            int neg = (sg.signature.sign(m1) == -1) + (sg.signature.sign(m2) == -1);
            if (neg % 2 != total) continue;
            std::vector<EdgeId> cyc;
            for (EdgeId e = 0; e < 6; ++e)
                if (e != m1 && e != m2) cyc.push_back(e);
            d.parts.push_back({PartKind::matching, {m1, m2}});
            d.parts.push_back({PartKind::two_regular_spanning, std::move(cyc)});
            return d;
        }
        throw Error(Errc::internal_error, "K4 has no parity-matched perfect matching");
    }

    if (n % 2 == 1) {
        // n = 2k+1: k edge-disjoint 4-edge paths cover everything.
        int k = (n - 1) / 2;
        for (int i = 0; i + 1 <= k - 1; ++i)
            d.parts.push_back({PartKind::path,
                               {rim_edge(i), spoke(i), spoke(i + k), rim_edge(i + k)}});
        d.parts.push_back({PartKind::path,
                           {rim_edge(k - 1), spoke(k - 1), spoke(2 * k - 1),
                            rim_edge(2 * k - 1)}});
    } else {
        // n = 2k: odd-wheel layout on rim[0..2k-3] with rim[2k-2] subdividing
        // the closing rim edge; the spare spoke becomes the 0-matching.
        int k = n / 2;
        int kk = k - 1;
        for (int i = 0; i + 1 <= kk - 1; ++i)
            d.parts.push_back({PartKind::path,
                               {rim_edge(i), spoke(i), spoke(i + kk), rim_edge(i + kk)}});
        d.parts.push_back({PartKind::path,
                           {rim_edge(kk - 1), spoke(kk - 1), spoke(2 * k - 3),
                            rim_edge(2 * k - 3), rim_edge(2 * k - 2)}});
        d.parts.push_back({PartKind::matching, {spoke(2 * k - 2)}});
    }
    return d;
}

IncidenceColoring color_wheel(const SignedGraph& sg) {
    auto ws = recognize_wheel(sg.graph);
    auto d = wheel_decomposition(sg, ws);
    return color_from_decomposition(sg, d);
}

NecklaceStructure recognize_necklace(const Graph& g,
                                     std::optional<std::pair<VertexId, VertexId>> hubs) {
    if (!g.connected())
        throw Error(Errc::not_a_necklace, "graph is not connected");

    VertexId u = -1, v = -1;
    if (is_cycle_graph(g)) {
        if (!hubs)
            throw Error(Errc::is_a_cycle,
                        "a cycle is only a k=2 necklace with explicit hubs");
        u = hubs->first;
        v = hubs->second;
        if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw Error(Errc::not_a_necklace, "bad hub hints");
    } else {
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            if (g.degree(w) == 2) continue;
            if (g.degree(w) < 2)
                throw Error(Errc::not_a_necklace,
                            "vertex " + std::to_string(w) + " has degree " +
                                std::to_string(g.degree(w)));
            if (u == -1)
                u = w;
            else if (v == -1)
                v = w;
            else
                throw Error(Errc::not_a_necklace, "more than two high-degree vertices");
        }
        if (v == -1)
            throw Error(Errc::not_a_necklace, "fewer than two high-degree vertices");
        if (g.degree(u) != g.degree(v))
            throw Error(Errc::not_a_necklace, "hub degrees differ");
        if (hubs && !((hubs->first == u && hubs->second == v) ||
                      (hubs->first == v && hubs->second == u)))
            throw Error(Errc::not_a_necklace, "hub hints do not match the structure");
    }

    std::vector<char> interior_seen(g.vertex_count(), 0);
    std::vector<std::vector<VertexId>> paths;
    int covered = 0;
    for (EdgeId e0 : g.incident_edges(u)) {
        std::vector<VertexId> path{u};
        VertexId cur = g.other_end(e0, u);
        EdgeId prev = e0;
        ++covered;
        while (cur != v) {
            if (cur == u || interior_seen[cur] || g.degree(cur) != 2)
                throw Error(Errc::not_a_necklace, "strand does not run hub to hub");
            interior_seen[cur] = 1;
            path.push_back(cur);
            EdgeId step = -1;
            for (EdgeId e : g.incident_edges(cur))
                if (e != prev) step = e;
            prev = step;
            cur = g.other_end(step, cur);
            ++covered;
        }
        path.push_back(v);
        paths.push_back(std::move(path));
    }
    if (covered != g.edge_count())
        throw Error(Errc::not_a_necklace, "edges left over after strand walks");
    std::stable_sort(paths.begin(), paths.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return {u, v, std::move(paths)};
}

IncidenceColoring color_necklace(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    auto ns = recognize_necklace(g);
    int k = static_cast<int>(ns.paths.size());
    if (k < 3) throw Error(Errc::is_a_cycle, "two strands form a cycle");

    // Edge lists per strand, hub u to hub v.
    std::vector<std::vector<EdgeId>> pe(k);
    for (int i = 0; i < k; ++i)
        for (size_t j = 0; j + 1 < ns.paths[i].size(); ++j)
            pe[i].push_back(*g.find_edge(ns.paths[i][j], ns.paths[i][j + 1]));

    IncidenceColoring col(k, g.edge_count());
    auto second_vertex = [&](int i) { return ns.paths[i][1]; };
    auto drop_first = [](const std::vector<EdgeId>& es) {
        return std::vector<EdgeId>(es.begin() + 1, es.end());
    };
    auto drop_last = [](const std::vector<EdgeId>& es) {
        return std::vector<EdgeId>(es.begin(), es.end() - 1);
    };
    auto reversed = [](std::vector<EdgeId> es) {
        std::reverse(es.begin(), es.end());
        return es;
    };
    auto concat = [](std::initializer_list<std::vector<EdgeId>> lists) {
        std::vector<EdgeId> out;
        for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
        return out;
    };

    if (k % 2 == 1) {
        int r = (k - 1) / 2;
        // Base stage on the three shortest strands: both hub-facing edges of
        // strands 2 and 3 park on {0,0}, everything else is one {+-1} path.
        paint_edge(sg, pe[1].front(), ns.u, 0, col);
        paint_edge(sg, pe[2].back(), ns.v, 0, col);
        auto chain = concat({drop_first(pe[1]), reversed(pe[0]), drop_last(pe[2])});
        chain_paint(sg, chain, second_vertex(1), 1, col);
        int l = 1;  // strand whose first edge holds the 0 at u
        for (int p = 1; p <= r - 1; ++p) {
            int a_idx = 2 * p + 1, b_idx = 2 * p + 2;
            int alpha = p + 1;
            EdgeId old_zero = pe[l].front();
            paint_edge(sg, pe[a_idx].front(), ns.u, 0, col);
            auto ext = concat({{old_zero}, pe[b_idx], reversed(drop_first(pe[a_idx]))});
            chain_paint(sg, ext, second_vertex(l), alpha, col);
            l = a_idx;
        }
    } else {
        int r = k / 2;
        // Base stage on the four shortest strands: one {+-1} path anchored so
        // the hub-facing incidence of strand 3 reads +1, one {+-2} path over
        // the rest.
        EdgeId e3 = pe[2].front();
        auto path_a = concat({{e3}, pe[0], {pe[1].back()}});
        chain_paint(sg, path_a, second_vertex(2), -sg.signature.sign(e3), col);
        auto path_b = concat({drop_first(pe[2]), reversed(pe[3]), drop_last(pe[1])});
        chain_paint(sg, path_b, second_vertex(2), 2, col);
        int l = 2;  // strand whose first edge holds the +1 at u
        for (int p = 1; p <= r - 2; ++p) {
            int a_idx = 2 * p + 2, b_idx = 2 * p + 3;
            int alpha = p + 2;
            EdgeId old_one = pe[l].front();
            paint_edge(sg, pe[a_idx].front(), ns.u, 1, col);
            auto ext = concat({{old_one}, pe[b_idx], reversed(drop_first(pe[a_idx]))});
            chain_paint(sg, ext, second_vertex(l), alpha, col);
            l = a_idx;
        }
    }
    return col;
}

BipartiteStructure recognize_complete_bipartite(const Graph& g) {
    if (!g.connected())
        throw Error(Errc::not_complete_bipartite, "graph is not connected");
    std::vector<int> side(g.vertex_count(), -1);
    std::vector<VertexId> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident_edges(v)) {
            VertexId w = g.other_end(e, v);
            if (side[w] == -1) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                throw Error(Errc::not_complete_bipartite, "graph contains an odd cycle");
            }
        }
    }
    BipartiteStructure bs;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        (side[v] == 0 ? bs.small_part : bs.large_part).push_back(v);
    if (bs.small_part.size() > bs.large_part.size())
        std::swap(bs.small_part, bs.large_part);
    if (static_cast<size_t>(g.edge_count()) != bs.small_part.size() * bs.large_part.size())
        throw Error(Errc::not_complete_bipartite, "missing cross edges");
    return bs;
}

Decomposition bipartite_decomposition(const Graph& g, const BipartiteStructure& bs) {
    int r = static_cast<int>(bs.small_part.size());
    int t = static_cast<int>(bs.large_part.size());
    if (r == t)
        throw Error(Errc::equal_parts, "equal part sizes have no path decomposition here");
    int s = t / 2;
    auto ue = [&](int i, int j) {
        return *g.find_edge(bs.small_part[i], bs.large_part[((j % t) + t) % t]);
    };
    Decomposition d;
    for (int j = 0; j < s; ++j) {
        std::vector<EdgeId> path;
        for (int i = 0; i < r; ++i) {
            path.push_back(ue(i, i + 2 * j));
            path.push_back(ue(i, i + 2 * j + 1));
        }
        d.parts.push_back({PartKind::path, std::move(path)});
    }
    if (t % 2 == 1) {
        std::vector<EdgeId> matching;
        for (int i = 0; i < r; ++i) matching.push_back(ue(i, i - 1));
        d.parts.push_back({PartKind::matching, std::move(matching)});
    }
    return d;
}

IncidenceColoring color_complete_bipartite(const SignedGraph& sg) {
    auto bs = recognize_complete_bipartite(sg.graph);
    auto d = bipartite_decomposition(sg.graph, bs);
    return color_from_decomposition(sg, d);
}

const char* method_name(Method m) {
    switch (m) {
        case Method::path: return "path";
        case Method::cycle: return "cycle";
        case Method::cactus: return "cactus";
        case Method::wheel: return "wheel";
        case Method::necklace: return "necklace";
        case Method::bipartite: return "bipartite";
        case Method::exact: return "exact";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::path, Method::cycle, Method::cactus, Method::wheel,
                     Method::necklace, Method::bipartite, Method::exact})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

AutoResult auto_color(const SignedGraph& sg, const SolveOptions& opts) {
    const Graph& g = sg.graph;
    int m = g.edge_count();

    if (m >= 1 && g.connected() && max_degree(g) <= 2 && !is_cycle_graph(g)) {
        if (m == 1) {
            IncidenceColoring col(1, 1);
            paint_edge(sg, 0, g.edge(0).u, 0, col);
            return {std::move(col), Method::path};
        }
        VertexId leaf = -1;
        for (VertexId v = 0; v < g.vertex_count() && leaf == -1; ++v)
            if (g.degree(v) == 1) leaf = v;
        std::vector<EdgeId> es;
        VertexId cur = leaf;
        EdgeId prev = -1;
        while (true) {
            EdgeId step = -1;
            for (EdgeId e : g.incident_edges(cur))
                if (e != prev) step = e;
            if (step == -1) break;
            es.push_back(step);
            prev = step;
            cur = g.other_end(step, cur);
        }
        IncidenceColoring col(2, m);
        chain_paint(sg, es, leaf, 1, col);
        return {std::move(col), Method::path};
    }
    if (is_cycle_graph(g)) return {color_cycle(sg), Method::cycle};

    auto attempt = [&](Method tag, auto fn,
                       std::initializer_list<Errc> expected) -> std::optional<AutoResult> {
        try {
            return AutoResult{fn(), tag};
        } catch (const Error& err) {
            for (Errc c : expected)
                if (err.code() == c) return std::nullopt;
            throw;
        }
    };

    if (auto r = attempt(Method::cactus, [&] { return color_cactus(sg); },
                         {Errc::not_a_cactus, Errc::is_a_cycle, Errc::disconnected}))
        return std::move(*r);
    if (auto r = attempt(Method::wheel, [&] { return color_wheel(sg); },
                         {Errc::not_a_wheel}))
        return std::move(*r);
    if (auto r = attempt(Method::necklace, [&] { return color_necklace(sg); },
                         {Errc::not_a_necklace, Errc::is_a_cycle}))
        return std::move(*r);
    if (auto r = attempt(Method::bipartite, [&] { return color_complete_bipartite(sg); },
                         {Errc::not_complete_bipartite, Errc::equal_parts}))
        return std::move(*r);

    auto res = exact_chromatic_index(sg, opts);
    return {std::move(res.witness), Method::exact};
}

}  // namespace sgc
