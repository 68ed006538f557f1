#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgcolor/core.hpp"

namespace sgc {

// Generated graph plus labeling hints (hub ids, part sizes, seed, ...).
// Metadata values use the 1-indexed vertex convention of the file format.
struct GenResult {
    Graph graph;
    std::map<std::string, std::string> metadata;
};

GenResult make_path(int n);   // n >= 1 vertices in a row
GenResult make_cycle(int n);  // n >= 3
GenResult make_star(int n);   // n >= 2 vertices, center 0
GenResult make_wheel(int n);  // n >= 4 vertices total, hub 0, rim 1..n-1

// Two hubs (0 and 1) joined by lengths.size() >= 2 internally disjoint paths
// of the given edge counts; at most one length may be 1 (simple graph).
GenResult make_necklace(const std::vector<int>& lengths);

// Parts {0..r-1} and {r..r+t-1}, edges in row-major order.
GenResult make_complete_bipartite(int r, int t);

// Grows a cactus from a single vertex: each step attaches, at a uniformly
// random existing vertex, either a new cycle (probability cycle_prob, length
// uniform in 3..max_cycle_len, truncated near the target) or a new pendant
// edge. Cactushood holds by construction for every seed.
GenResult make_random_cactus(int target_vertices, std::uint64_t seed,
                             double cycle_prob = 0.5, int max_cycle_len = 6);

// The doubled augmented-bipartite construction whose every signature needs
// Delta + 1 colors: two copies of K_{2k,2k} + a pairing of one part + an
// apex over the other, joined through a shared degree-2 middle vertex.
// 8k+3 vertices, all of degree 2k+1 except the middle one.
GenResult make_class2pm(int k);  // k >= 1

struct FamilySpec {
    // One of: path, cycle, star, wheel, necklace, complete_bipartite,
    // random_cactus, class2pm.
    std::string family;
    // path/cycle/star/wheel: {n}; necklace: the path lengths;
    // complete_bipartite: {r, t}; random_cactus: {target_vertices};
    // class2pm: {k}.
    std::vector<long long> params;
    std::uint64_t seed = 0;  // random_cactus only
    double cycle_prob = 0.5;
    int max_cycle_len = 6;
};

// Dispatches to the make_* builders; unknown families and bad parameters
// raise InvalidSpec.
GenResult generate(const FamilySpec& spec);

Signature all_positive_signature(const Graph& g);
Signature all_negative_signature(const Graph& g);
// Each edge's sign drawn from a seeded 64-bit PRNG (low bit per draw).
Signature random_signature(const Graph& g, std::uint64_t seed);
// Index mode lives in core: signature_from_index(g.edge_count(), i).

}  // namespace sgc
