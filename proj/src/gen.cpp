#include "sgcolor/gen.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace sgc {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::invalid_spec, what);
}

}  // namespace

GenResult make_path(int n) {
    require(n >= 1, "path needs at least 1 vertex");
    std::vector<EdgeEnds> ends;
    for (int i = 0; i + 1 < n; ++i) ends.push_back({i, i + 1});
    return {Graph(n, std::move(ends)), {{"family", "path"}, {"n", std::to_string(n)}}};
}

GenResult make_cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<EdgeEnds> ends;
    for (int i = 0; i < n; ++i) ends.push_back({i, (i + 1) % n});
    return {Graph(n, std::move(ends)), {{"family", "cycle"}, {"n", std::to_string(n)}}};
}

GenResult make_star(int n) {
    require(n >= 2, "star needs at least 2 vertices");
    std::vector<EdgeEnds> ends;
    for (int i = 1; i < n; ++i) ends.push_back({0, i});
    return {Graph(n, std::move(ends)),
            {{"family", "star"}, {"n", std::to_string(n)}, {"center", "1"}}};
}

GenResult make_wheel(int n) {
    require(n >= 4, "wheel needs at least 4 vertices");
    std::vector<EdgeEnds> ends;
    for (int i = 1; i < n; ++i) ends.push_back({0, i});  // spokes
    for (int i = 1; i + 1 < n; ++i) ends.push_back({i, i + 1});
    ends.push_back({n - 1, 1});
    return {Graph(n, std::move(ends)),
            {{"family", "wheel"}, {"n", std::to_string(n)}, {"hub", "1"}}};
}

GenResult make_necklace(const std::vector<int>& lengths) {
    require(lengths.size() >= 2, "necklace needs at least 2 paths");
    int ones = 0;
    for (int l : lengths) {
        require(l >= 1, "necklace path lengths must be positive");
        ones += (l == 1);
    }
    require(ones <= 1, "two length-1 paths would form a parallel edge");

    std::vector<EdgeEnds> ends;
    int next = 2;  // hubs are 0 and 1
    for (int l : lengths) {
        VertexId prev = 0;
        for (int s = 0; s + 1 < l; ++s) {
            ends.push_back({prev, next});
            prev = next++;
        }
        ends.push_back({prev, 1});
    }
    return {Graph(next, std::move(ends)),
            {{"family", "necklace"},
             {"hubs", "1,2"},
             {"lengths", join_ints(lengths)}}};
}

GenResult make_complete_bipartite(int r, int t) {
    require(r >= 1 && t >= 1, "complete bipartite parts must be nonempty");
    std::vector<EdgeEnds> ends;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < t; ++j) ends.push_back({i, r + j});
    return {Graph(r + t, std::move(ends)),
            {{"family", "complete_bipartite"},
             {"r", std::to_string(r)},
             {"t", std::to_string(t)}}};
}

GenResult make_random_cactus(int target_vertices, std::uint64_t seed, double cycle_prob,
                             int max_cycle_len) {
    require(target_vertices >= 1, "cactus needs at least 1 vertex");
    require(max_cycle_len >= 3, "cycles need length at least 3");
    require(cycle_prob >= 0.0 && cycle_prob <= 1.0, "cycle probability must be in [0,1]");

    std::mt19937_64 rng(seed);
    auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<EdgeEnds> ends;
    int n = 1;
    while (n < target_vertices) {
        VertexId attach = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
        int room = target_vertices - n;
        if (uniform01() < cycle_prob && room >= 2) {
            int len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_cycle_len - 2));
            int fresh = std::min(len - 1, room);  // new vertices on this cycle
            ends.push_back({attach, n});
            for (int i = 0; i + 1 < fresh; ++i) ends.push_back({n + i, n + i + 1});
            ends.push_back({n + fresh - 1, attach});
            n += fresh;
        } else {
            ends.push_back({attach, n});
            n += 1;
        }
    }
    return {Graph(n, std::move(ends)),
            {{"family", "random_cactus"},
             {"n", std::to_string(target_vertices)},
             {"seed", std::to_string(seed)},
             {"cycle_prob", std::to_string(cycle_prob)},
             {"max_cycle_len", std::to_string(max_cycle_len)}}};
}

GenResult make_class2pm(int k) {
    require(k >= 1, "construction needs k >= 1");
    int copy_size = 4 * k + 1;
    VertexId middle = 2 * copy_size;  // the one degree-2 vertex
    std::vector<EdgeEnds> ends;
    for (int c = 0; c < 2; ++c) {
        int off = c * copy_size;
        auto u = [&](int i) { return off + i; };
        auto v = [&](int j) { return off + 2 * k + j; };
        VertexId apex = off + 4 * k;
        for (int i = 0; i < 2 * k; ++i)
            for (int j = 0; j < 2 * k; ++j) ends.push_back({u(i), v(j)});
        for (int i = 0; i < k; ++i) ends.push_back({u(2 * i), u(2 * i + 1)});
        for (int j = 0; j < 2 * k; ++j) ends.push_back({v(j), apex});
    }
    ends.push_back({4 * k, middle});              // first copy's apex
    ends.push_back({copy_size + 4 * k, middle});  // second copy's apex
    return {Graph(2 * copy_size + 1, std::move(ends)),
            {{"family", "class2pm"},
             {"k", std::to_string(k)},
             {"delta", std::to_string(2 * k + 1)},
             {"middle", std::to_string(middle + 1)}}};
}

GenResult generate(const FamilySpec& spec) {
    auto want_params = [&](size_t count) {
        if (spec.params.size() != count)
            throw Error(Errc::invalid_spec, spec.family + " takes " + std::to_string(count) +
                                                " parameter(s), got " +
                                                std::to_string(spec.params.size()));
    };
    auto as_int = [&](long long x) {
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
            throw Error(Errc::invalid_spec, "parameter out of range: " + std::to_string(x));
        return static_cast<int>(x);
    };

    if (spec.family == "path") {
        want_params(1);
        return make_path(as_int(spec.params[0]));
    }
    if (spec.family == "cycle") {
        want_params(1);
        return make_cycle(as_int(spec.params[0]));
    }
    if (spec.family == "star") {
        want_params(1);
        return make_star(as_int(spec.params[0]));
    }
    if (spec.family == "wheel") {
        want_params(1);
        return make_wheel(as_int(spec.params[0]));
    }
    if (spec.family == "necklace") {
        std::vector<int> lengths;
        lengths.reserve(spec.params.size());
        for (long long p : spec.params) lengths.push_back(as_int(p));
        return make_necklace(lengths);
    }
    if (spec.family == "complete_bipartite") {
        want_params(2);
        return make_complete_bipartite(as_int(spec.params[0]), as_int(spec.params[1]));
    }
    if (spec.family == "random_cactus") {
        want_params(1);
        return make_random_cactus(as_int(spec.params[0]), spec.seed, spec.cycle_prob,
                                  spec.max_cycle_len);
    }
    if (spec.family == "class2pm") {
        want_params(1);
        return make_class2pm(as_int(spec.params[0]));
    }
    throw Error(Errc::invalid_spec, "unknown family: " + spec.family);
}

Signature all_positive_signature(const Graph& g) {
    return Signature(std::vector<std::int8_t>(g.edge_count(), 1));
}

Signature all_negative_signature(const Graph& g) {
    return Signature(std::vector<std::int8_t>(g.edge_count(), -1));
}

Signature random_signature(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int8_t> signs(g.edge_count());
    for (auto& s : signs) s = (rng() & 1) ? -1 : 1;
    return Signature(std::move(signs));
}

}  // namespace sgc
