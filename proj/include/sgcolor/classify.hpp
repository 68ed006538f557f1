#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgcolor/core.hpp"
#include "sgcolor/exact.hpp"

namespace sgc {

// Reduced fraction, denominator always positive.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
};

Rational make_rational(long long num, long long den);
std::string to_string(const Rational& r);

enum class SignedClass { class_1pm, class_2pm, mixed };

// "1pm", "2pm" or "mixed".
const char* signed_class_name(SignedClass c);

struct ClassifyOptions {
    // Representative sweeps refuse graphs with more than this many independent
    // cycles; naive sweeps apply the same cap to the edge count.
    int budget = 24;
    // Enumerate all 2^m signatures instead of one per switching class. The
    // resulting fraction is the same (classes all have equal size); this is
    // the cross-check mode.
    bool naive = false;
    int jobs = 1;
    SolveOptions solve;
};

struct RatioReport {
    int delta = 0;
    long long total = 0;      // signatures tested
    long long colorable = 0;  // of those, how many admit a delta-coloring
    Rational ratio;           // colorable / total
    bool naive = false;
};

// Fraction of switching classes whose signatures color with max-degree many
// colors. Signature-independent input: the fraction is a property of the
// underlying graph.
RatioReport class_ratio(const Graph& g, const ClassifyOptions& opts = {});

struct StructuralReport {
    int delta = 0;
    bool class_2pm = false;
    // When delta is odd and coverable: a matching touching every max-degree
    // vertex (sorted edge ids). Empty otherwise.
    std::vector<EdgeId> witness_matching;
};

// Decides "every signature needs delta + 1 colors" from the underlying graph
// alone: that holds exactly when delta is odd and no matching covers all
// max-degree vertices.
StructuralReport structural_class_2pm(const Graph& g);

struct ClassReport {
    int delta = 0;
    SignedClass verdict = SignedClass::mixed;
    RatioReport ratio;
    StructuralReport structural;
};

// Full classification. The enumerated ratio and the structural test must
// agree on the "2pm" facet; a disagreement means a solver bug and raises
// InternalInvariantViolation.
ClassReport signed_class(const Graph& g, const ClassifyOptions& opts = {});

struct ConjectureReport {
    int r = 0;
    int delta = 0;
    bool exhaustive = false;
    long long checked = 0;
    long long predicted_colorable = 0;   // signatures the prediction says color
    long long open_counterexamples = 0;  // of those, how many failed to
    // Ascending, at most 16.
    std::vector<std::uint64_t> counterexample_indices;
};

// Probes the balanced-complete-bipartite prediction on K_{r,r}: a signature
// should be delta-colorable exactly when r is odd or its negative count is
// even. Checks every signature when 2^(r*r) <= trials, otherwise index 0
// plus seeded random draws. A predicted-colorable signature that fails to
// color is a genuine counterexample to the open direction and lands in the
// report. A coloring of an odd-negative signature on even r contradicts a
// parity obstruction that provably forbids it, so that raises
// InternalInvariantViolation instead.
ConjectureReport probe_conjecture(int r, long long trials, std::uint64_t seed,
                                  const ClassifyOptions& opts = {});

}  // namespace sgc
