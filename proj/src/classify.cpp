#include "sgcolor/classify.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <unordered_set>

#include "sgcolor/switching.hpp"

namespace sgc {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

const char* signed_class_name(SignedClass c) {
    switch (c) {
        case SignedClass::class_1pm: return "1pm";
        case SignedClass::class_2pm: return "2pm";
        case SignedClass::mixed: return "mixed";
    }
    return "?";
}

namespace {

// Runs sig_at(i) for i in [0, total) and counts how many of the resulting
// signatures color with delta colors. Work is strided across jobs threads;
// counting commutes, so the result is order-independent.
template <typename SigAt>
long long count_colorable(const Graph& g, int delta, const SolveOptions& sopts, int jobs,
                          long long total, SigAt&& sig_at) {
    jobs = static_cast<int>(std::min<long long>(jobs, total));
    auto sweep = [&](long long first, long long stride) {
        SignedGraph sg{g, Signature(std::vector<std::int8_t>(g.edge_count(), 1))};
        long long hits = 0;
        for (long long i = first; i < total; i += stride) {
            sg.signature = sig_at(static_cast<std::uint64_t>(i));
            if (try_color_with(sg, delta, sopts)) ++hits;
        }
        return hits;
    };
    if (jobs <= 1) return sweep(0, 1);

    std::vector<long long> partial(jobs, 0);
    std::exception_ptr first_error = nullptr;
    std::mutex mu;
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            try {
                partial[t] = sweep(t, jobs);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
    long long hits = 0;
    for (long long p : partial) hits += p;
    return hits;
}

// Branch-and-bound search for a matching covering every target vertex.
// Always branches on the uncovered target with the fewest usable edges;
// failed used-vertex sets are memoized (graphs up to 64 vertices).
class CoverSearch {
  public:
    CoverSearch(const Graph& g, std::vector<VertexId> targets)
        : g_(g),
          targets_(std::move(targets)),
          used_(g.vertex_count(), 0),
          memo_on_(g.vertex_count() <= 64) {}

    std::optional<std::vector<EdgeId>> run() {
        if (solve()) {
            std::sort(picked_.begin(), picked_.end());
            return picked_;
        }
        return std::nullopt;
    }

  private:
    bool solve() {
        if (memo_on_ && failed_.count(mask_)) return false;
        VertexId best = -1;
        int best_count = std::numeric_limits<int>::max();
        for (VertexId v : targets_) {
            if (used_[v]) continue;
            int count = 0;
            for (EdgeId e : g_.incident_edges(v))
                if (!used_[g_.other_end(e, v)]) ++count;
            if (count < best_count) {
                best_count = count;
                best = v;
            }
        }
        if (best == -1) return true;  // every target covered
        if (best_count > 0) {
            for (EdgeId e : g_.incident_edges(best)) {
                VertexId w = g_.other_end(e, best);
                if (used_[w]) continue;
                take(best, w);
                picked_.push_back(e);
                if (solve()) return true;
                picked_.pop_back();
                release(best, w);
            }
        }
        if (memo_on_) failed_.insert(mask_);
        return false;
    }

    void take(VertexId a, VertexId b) {
        used_[a] = used_[b] = 1;
        if (memo_on_) mask_ |= (1ULL << a) | (1ULL << b);
    }
    void release(VertexId a, VertexId b) {
        used_[a] = used_[b] = 0;
        if (memo_on_) mask_ &= ~((1ULL << a) | (1ULL << b));
    }

    const Graph& g_;
    std::vector<VertexId> targets_;
    std::vector<char> used_;
    std::vector<EdgeId> picked_;
    bool memo_on_;
    std::uint64_t mask_ = 0;
    std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

RatioReport class_ratio(const Graph& g, const ClassifyOptions& opts) {
    if (opts.jobs < 1) throw Error(Errc::invalid_argument, "jobs must be positive");
    if (opts.budget < 0) throw Error(Errc::invalid_argument, "budget must be nonnegative");
    int cap = std::min(opts.budget, 62);  // totals are kept in long long

    RatioReport rep;
    rep.delta = max_degree(g);
    rep.naive = opts.naive;
    if (opts.naive) {
        int m = g.edge_count();
        if (m > cap)
            throw Error(Errc::budget_exceeded,
                        "naive sweep over 2^" + std::to_string(m) +
                            " signatures exceeds the budget of 2^" + std::to_string(cap));
        rep.total = 1LL << m;
        rep.colorable =
            count_colorable(g, rep.delta, opts.solve, opts.jobs, rep.total,
                            [&](std::uint64_t i) { return signature_from_index(m, i); });
    } else {
        SwitchingClassRepresentatives reps(g);
        int cotree = reps.cotree_edge_count();
        if (cotree > cap)
            throw Error(Errc::budget_exceeded,
                        std::to_string(cotree) + " independent cycles exceed the budget of " +
                            std::to_string(cap));
        rep.total = static_cast<long long>(reps.count());
        rep.colorable = count_colorable(g, rep.delta, opts.solve, opts.jobs, rep.total,
                                        [&](std::uint64_t i) { return reps.at(i); });
    }
    rep.ratio = make_rational(rep.colorable, rep.total);
    return rep;
}

StructuralReport structural_class_2pm(const Graph& g) {
    StructuralReport rep;
    rep.delta = max_degree(g);
    if (rep.delta == 0 || rep.delta % 2 == 0) return rep;  // only odd delta can be 2pm

    std::vector<VertexId> targets;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == rep.delta) targets.push_back(v);
    CoverSearch search(g, std::move(targets));
    if (auto matching = search.run())
        rep.witness_matching = std::move(*matching);
    else
        rep.class_2pm = true;
    return rep;
}

ClassReport signed_class(const Graph& g, const ClassifyOptions& opts) {
    ClassReport rep;
    rep.delta = max_degree(g);
    rep.ratio = class_ratio(g, opts);
    rep.structural = structural_class_2pm(g);

    bool none_colorable = rep.ratio.colorable == 0;
    if (none_colorable != rep.structural.class_2pm)
        throw Error(Errc::internal_error,
                    "enumerated ratio " + to_string(rep.ratio.ratio) +
                        " contradicts the structural max-degree matching test");
    rep.verdict = none_colorable                            ? SignedClass::class_2pm
                  : rep.ratio.colorable == rep.ratio.total ? SignedClass::class_1pm
                                                           : SignedClass::mixed;
    return rep;
}

ConjectureReport probe_conjecture(int r, long long trials, std::uint64_t seed,
                                  const ClassifyOptions& opts) {
    if (r < 1) throw Error(Errc::invalid_argument, "part size must be positive");
    if (trials < 1) throw Error(Errc::invalid_argument, "trials must be positive");
    long long m = static_cast<long long>(r) * r;
    if (m > 64)
        throw Error(Errc::budget_exceeded,
                    "K_{" + std::to_string(r) + "," + std::to_string(r) + "} has " +
                        std::to_string(m) + " edges; index signatures stop at 64");

    std::vector<EdgeEnds> ends;
    ends.reserve(m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ends.push_back({i, r + j});
    Graph g(2 * r, std::move(ends));

    ConjectureReport rep;
    rep.r = r;
    rep.delta = r;
    std::vector<std::uint64_t> indices;
    if (m < 63 && (1LL << m) <= trials) {
        rep.exhaustive = true;
        indices.reserve(1ULL << m);
        for (std::uint64_t i = 0; i < (1ULL << m); ++i) indices.push_back(i);
    } else {
        std::mt19937_64 rng(seed);
        std::uint64_t mask = m >= 64 ? ~0ULL : (1ULL << m) - 1;
        indices.push_back(0);  // all-positive first, always
        for (long long t = 1; t < trials; ++t) indices.push_back(rng() & mask);
    }

    struct Tally {
        long long checked = 0;
        long long predicted = 0;
        long long opens = 0;
        std::vector<std::uint64_t> open_indices;
        std::optional<std::uint64_t> violation;
    };
    auto sweep = [&](long long first, long long stride) {
        SignedGraph sg{g, Signature(std::vector<std::int8_t>(g.edge_count(), 1))};
        Tally tally;
        for (size_t i = first; i < indices.size(); i += stride) {
            std::uint64_t idx = indices[i];
            sg.signature = signature_from_index(g.edge_count(), idx);
            bool predicted = r % 2 == 1 || sg.signature.negative_count() % 2 == 0;
            bool colorable = try_color_with(sg, r, opts.solve).has_value();
            ++tally.checked;
            if (predicted) {
                ++tally.predicted;
                if (!colorable) {
                    ++tally.opens;
                    tally.open_indices.push_back(idx);
                }
            } else if (colorable) {
                if (!tally.violation || idx < *tally.violation) tally.violation = idx;
            }
        }
        return tally;
    };

    int jobs = opts.jobs < 1 ? 1 : static_cast<int>(std::min<long long>(
                                       opts.jobs, static_cast<long long>(indices.size())));
    std::vector<Tally> tallies(jobs);
    if (jobs <= 1) {
        tallies[0] = sweep(0, 1);
    } else {
        std::exception_ptr first_error = nullptr;
        std::mutex mu;
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int t = 0; t < jobs; ++t) {
            threads.emplace_back([&, t] {
                try {
                    tallies[t] = sweep(t, jobs);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::optional<std::uint64_t> violation;
    std::vector<std::uint64_t> opens;
    for (const Tally& t : tallies) {
        rep.checked += t.checked;
        rep.predicted_colorable += t.predicted;
        rep.open_counterexamples += t.opens;
        opens.insert(opens.end(), t.open_indices.begin(), t.open_indices.end());
        if (t.violation && (!violation || *t.violation < *violation)) violation = t.violation;
    }
    if (violation)
        throw Error(Errc::internal_error,
                    "signature index " + std::to_string(*violation) + " of K_{" +
                        std::to_string(r) + "," + std::to_string(r) +
                        "} colors despite the odd-negative parity obstruction");
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    if (opens.size() > 16) opens.resize(16);
    rep.counterexample_indices = std::move(opens);
    return rep;
}

}  // namespace sgc
