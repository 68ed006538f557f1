#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgcolor/classify.hpp"
#include "sgcolor/colorers.hpp"
#include "sgcolor/core.hpp"
#include "sgcolor/exact.hpp"
#include "sgcolor/gen.hpp"
#include "sgcolor/io.hpp"
#include "sgcolor/switching.hpp"

namespace sgc {

namespace {

using nlohmann::json;

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::internal_error: return 3;
        case Errc::budget_exceeded:
        case Errc::invalid_coloring: return 2;
        default: return 1;
    }
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::edge_constraint: return "edge_constraint";
        case ViolationKind::vertex_properness: return "vertex_properness";
        case ViolationKind::color_out_of_range: return "color_out_of_range";
    }
    return "?";
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

long long parse_ll(const std::string& tok, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(Errc::invalid_argument, what + ": '" + tok + "' is not an integer");
    return value;
}

// Accepts both "1,2,3" and separate tokens.
std::vector<long long> parse_int_list(const std::vector<std::string>& raw,
                                      const std::string& what) {
    std::vector<long long> out;
    for (const std::string& chunk : raw) {
        size_t pos = 0;
        while (pos <= chunk.size()) {
            size_t comma = chunk.find(',', pos);
            size_t end = comma == std::string::npos ? chunk.size() : comma;
            if (end > pos) out.push_back(parse_ll(chunk.substr(pos, end - pos), what));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return out;
}

json coloring_json(const Graph& g, const IncidenceColoring& c) {
    json records = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeEnds& ee = g.edge(e);
        VertexId lo = std::min(ee.u, ee.v), hi = std::max(ee.u, ee.v);
        for (VertexId v : {lo, hi})
            records.push_back(json{{"vertex", v + 1},
                                   {"u", ee.u + 1},
                                   {"v", ee.v + 1},
                                   {"color", c.at(g, v, e)}});
    }
    return json{{"n", c.n_colors()}, {"records", std::move(records)}};
}

json matching_json(const Graph& g, const std::vector<EdgeId>& edges) {
    json out = json::array();
    for (EdgeId e : edges) out.push_back(json::array({g.edge(e).u + 1, g.edge(e).v + 1}));
    return out;
}

std::string matching_text(const Graph& g, const std::vector<EdgeId>& edges) {
    std::string out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.edge(edges[i]).u + 1) + "-" +
               std::to_string(g.edge(edges[i]).v + 1);
    }
    return out;
}

// The whole graph walked as one path; the path-method counterpart of the
// dispatcher's fast lane.
IncidenceColoring color_as_path(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    if (g.edge_count() == 0 || !g.connected() || max_degree(g) > 2)
        throw Error(Errc::not_a_path, "graph is not a nonempty path");
    VertexId leaf = -1;
    for (VertexId v = 0; v < g.vertex_count() && leaf == -1; ++v)
        if (g.degree(v) == 1) leaf = v;
    if (leaf == -1) throw Error(Errc::not_a_path, "graph is a cycle, not a path");
    std::vector<EdgeId> edges;
    VertexId cur = leaf;
    EdgeId prev = -1;
    while (true) {
        EdgeId step = -1;
        for (EdgeId e : g.incident_edges(cur))
            if (e != prev) step = e;
        if (step == -1) break;
        edges.push_back(step);
        prev = step;
        cur = g.other_end(step, cur);
    }
    if (g.edge_count() == 1) return color_path(sg, edges, leaf, 0, std::nullopt, 1);
    return color_path(sg, edges, leaf, 1, std::nullopt, 2);
}

struct ColorArgs {
    std::string input;
    std::string method = "auto";
    std::string output;
    bool force = false;
};

int do_color(const ColorArgs& a, bool as_json, std::ostream& out) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.input));
    const SignedGraph& sg = in.sg;
    SolveOptions sopts;
    sopts.force = a.force;

    IncidenceColoring col(0, 0);
    std::string method = a.method;
    if (a.method == "auto") {
        AutoResult r = auto_color(sg, sopts);
        col = std::move(r.coloring);
        method = method_name(r.method);
    } else if (a.method == "exact") {
        col = exact_chromatic_index(sg, sopts).witness;
    } else if (a.method == "path") {
        col = color_as_path(sg);
    } else if (a.method == "cycle") {
        col = color_cycle(sg);
    } else if (a.method == "cactus") {
        col = color_cactus(sg);
    } else if (a.method == "wheel") {
        col = color_wheel(sg);
    } else if (a.method == "necklace") {
        col = color_necklace(sg);
    } else if (a.method == "bipartite") {
        col = color_complete_bipartite(sg);
    } else {
        throw Error(Errc::invalid_argument, "unknown method: " + a.method);
    }

    VerificationReport check = verify_coloring(sg, col);
    if (!check.valid)
        throw Error(Errc::internal_error,
                    "produced coloring failed verification (" +
                        std::to_string(check.violations.size()) + " violation(s))");

    std::string text = serialize_coloring(sg.graph, col);
    if (!a.output.empty()) write_text_file(a.output, text);
    if (as_json) {
        json rep{{"command", "color"},
                 {"method", method},
                 {"n", col.n_colors()},
                 {"delta", max_degree(sg.graph)},
                 {"coloring", coloring_json(sg.graph, col)}};
        out << rep.dump(2) << "\n";
    } else if (a.output.empty()) {
        out << text;
    } else {
        out << "method=" << method << " n=" << col.n_colors() << "\n";
    }
    return 0;
}

struct ChromaticArgs {
    std::string input;
    std::string output;
    bool force = false;
};

int do_chromatic_index(const ChromaticArgs& a, bool as_json, std::ostream& out) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.input));
    SolveOptions sopts;
    sopts.force = a.force;
    ChromaticResult r = exact_chromatic_index(in.sg, sopts);
    if (!a.output.empty()) write_text_file(a.output, serialize_coloring(in.sg.graph, r.witness));
    if (as_json)
        out << json{{"command", "chromatic-index"}, {"delta", r.delta}, {"chi", r.chi}}.dump(2)
            << "\n";
    else
        out << "delta=" << r.delta << " chi=" << r.chi << "\n";
    return 0;
}

struct ClassifyArgs {
    std::string input;
    bool structural_only = false;
    bool naive = false;
    int budget = 24;
    int jobs = 1;
    bool force = false;
};

int do_classify(const ClassifyArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.input));
    if (in.sg.signature.negative_count() > 0)
        err << "warning: signature ignored; classification depends only on the underlying graph\n";
    const Graph& g = in.sg.graph;

    if (a.structural_only) {
        StructuralReport s = structural_class_2pm(g);
        if (as_json) {
            out << json{{"command", "classify"},
                        {"structural_only", true},
                        {"delta", s.delta},
                        {"class2pm", s.class_2pm},
                        {"witness_matching", matching_json(g, s.witness_matching)}}
                       .dump(2)
                << "\n";
        } else {
            out << "delta=" << s.delta << " class2pm=" << bool_name(s.class_2pm);
            if (!s.witness_matching.empty())
                out << " witness=" << matching_text(g, s.witness_matching);
            out << "\n";
        }
        return 0;
    }

    ClassifyOptions opts;
    opts.budget = a.budget;
    opts.naive = a.naive;
    opts.jobs = a.jobs;
    opts.solve.force = a.force;
    ClassReport rep = signed_class(g, opts);
    if (as_json) {
        out << json{{"command", "classify"},
                    {"delta", rep.delta},
                    {"class", signed_class_name(rep.verdict)},
                    {"ratio",
                     json{{"num", rep.ratio.ratio.num},
                          {"den", rep.ratio.ratio.den},
                          {"colorable", rep.ratio.colorable},
                          {"total", rep.ratio.total},
                          {"naive", rep.ratio.naive}}},
                    {"structural",
                     json{{"class2pm", rep.structural.class_2pm},
                          {"witness_matching", matching_json(g, rep.structural.witness_matching)}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "class=" << signed_class_name(rep.verdict) << " ratio="
            << to_string(rep.ratio.ratio) << "\n";
    }
    return 0;
}

struct RatioArgs {
    std::string input;
    bool naive = false;
    int budget = 24;
    int jobs = 1;
    bool force = false;
};

int do_ratio(const RatioArgs& a, bool as_json, std::ostream& out) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.input));
    ClassifyOptions opts;
    opts.budget = a.budget;
    opts.naive = a.naive;
    opts.jobs = a.jobs;
    opts.solve.force = a.force;
    RatioReport rep = class_ratio(in.sg.graph, opts);
    if (as_json) {
        out << json{{"command", "ratio"},
                    {"delta", rep.delta},
                    {"colorable", rep.colorable},
                    {"total", rep.total},
                    {"num", rep.ratio.num},
                    {"den", rep.ratio.den},
                    {"naive", rep.naive}}
                   .dump(2)
            << "\n";
    } else {
        out << "delta=" << rep.delta << " colorable=" << rep.colorable << " total=" << rep.total
            << " ratio=" << to_string(rep.ratio) << "\n";
    }
    return 0;
}

struct GenArgs {
    std::string family;
    std::vector<std::string> raw_params;
    std::string sign_mode = "all_positive";
    std::uint64_t seed = 0;
    bool index_set = false;
    std::uint64_t index = 0;
    double cycle_prob = 0.5;
    int max_cycle_len = 6;
    std::string output;
};

int do_gen(const GenArgs& a, bool as_json, std::ostream& out) {
    FamilySpec spec;
    spec.family = a.family;
    spec.params = parse_int_list(a.raw_params, "family parameter");
    spec.seed = a.seed;
    spec.cycle_prob = a.cycle_prob;
    spec.max_cycle_len = a.max_cycle_len;
    GenResult gen = generate(spec);

    Signature sig = all_positive_signature(gen.graph);
    if (a.sign_mode == "all_negative") {
        sig = all_negative_signature(gen.graph);
    } else if (a.sign_mode == "random") {
        sig = random_signature(gen.graph, a.seed);
        gen.metadata["sign_seed"] = std::to_string(a.seed);
    } else if (a.sign_mode == "index") {
        if (!a.index_set)
            throw Error(Errc::invalid_argument, "--sign index needs --index");
        sig = signature_from_index(gen.graph.edge_count(), a.index);
        gen.metadata["sign_index"] = std::to_string(a.index);
    } else if (a.sign_mode != "all_positive") {
        throw Error(Errc::invalid_argument, "unknown sign mode: " + a.sign_mode);
    }
    gen.metadata["sign"] = a.sign_mode;

    SignedGraph sg{gen.graph, std::move(sig)};
    std::string text = serialize_signed_graph(sg, gen.metadata);
    if (!a.output.empty()) write_text_file(a.output, text);
    if (as_json) {
        out << json{{"command", "gen"},
                    {"family", a.family},
                    {"vertices", sg.graph.vertex_count()},
                    {"edges", sg.graph.edge_count()},
                    {"metadata", gen.metadata},
                    {"sg", text}}
                   .dump(2)
            << "\n";
    } else if (a.output.empty()) {
        out << text;
    } else {
        out << "vertices=" << sg.graph.vertex_count() << " edges=" << sg.graph.edge_count()
            << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string coloring;
};

int do_verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.graph));
    IncidenceColoring col = parse_coloring(read_text_file(a.coloring), in.sg.graph);
    VerificationReport rep = verify_coloring(in.sg, col);
    const Graph& g = in.sg.graph;
    if (as_json) {
        json violations = json::array();
        for (const Violation& v : rep.violations) {
            json item{{"kind", violation_kind_name(v.kind)}, {"message", v.message}};
            item["edge"] = v.edge >= 0
                               ? json::array({g.edge(v.edge).u + 1, g.edge(v.edge).v + 1})
                               : json(nullptr);
            item["vertex"] = v.vertex >= 0 ? json(v.vertex + 1) : json(nullptr);
            violations.push_back(std::move(item));
        }
        out << json{{"command", "verify"}, {"valid", rep.valid}, {"violations", violations}}
                   .dump(2)
            << "\n";
    } else {
        out << (rep.valid ? "valid" : "invalid") << "\n";
        for (const Violation& v : rep.violations) {
            out << "violation " << violation_kind_name(v.kind);
            if (v.edge >= 0)
                out << " edge=" << g.edge(v.edge).u + 1 << "-" << g.edge(v.edge).v + 1;
            if (v.vertex >= 0) out << " vertex=" << v.vertex + 1;
            out << ": " << v.message << "\n";
        }
    }
    return rep.valid ? 0 : 2;
}

struct SwitchArgs {
    std::string graph;
    std::string vertices;
    std::string output;
};

int do_switch(const SwitchArgs& a, bool as_json, std::ostream& out) {
    ParsedSignedGraph in = parse_signed_graph(read_text_file(a.graph));
    std::vector<long long> raw = parse_int_list({a.vertices}, "switch vertex");
    std::vector<VertexId> vertices;
    for (long long v : raw) {
        if (v < 1 || v > in.sg.graph.vertex_count())
            throw Error(Errc::vertex_out_of_range,
                        "vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(in.sg.graph.vertex_count()));
        vertices.push_back(static_cast<VertexId>(v - 1));
    }
    SwitchSet set = make_switch_set(in.sg.graph, std::move(vertices));
    SignedGraph switched_sg = switched(in.sg, set);
    in.metadata["switched"] = a.vertices;
    std::string text = serialize_signed_graph(switched_sg, in.metadata);
    if (!a.output.empty()) write_text_file(a.output, text);
    if (as_json)
        out << json{{"command", "switch"}, {"sg", text}}.dump(2) << "\n";
    else if (a.output.empty())
        out << text;
    else
        out << "switched=" << set.vertices.size() << " vertices\n";
    return 0;
}

struct ProbeArgs {
    int r = 0;
    long long trials = 256;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool force = false;
};

int do_probe(const ProbeArgs& a, bool as_json, std::ostream& out) {
    ClassifyOptions opts;
    opts.jobs = a.jobs;
    opts.solve.force = a.force;
    ConjectureReport rep = probe_conjecture(a.r, a.trials, a.seed, opts);
    if (as_json) {
        out << json{{"command", "probe-conjecture"},
                    {"r", rep.r},
                    {"delta", rep.delta},
                    {"exhaustive", rep.exhaustive},
                    {"checked", rep.checked},
                    {"predicted_colorable", rep.predicted_colorable},
                    {"open_counterexamples", rep.open_counterexamples},
                    {"counterexample_indices", rep.counterexample_indices}}
                   .dump(2)
            << "\n";
    } else {
        out << "r=" << rep.r << " delta=" << rep.delta << " exhaustive="
            << bool_name(rep.exhaustive) << " checked=" << rep.checked
            << " predicted_colorable=" << rep.predicted_colorable
            << " open_counterexamples=" << rep.open_counterexamples << "\n";
        if (!rep.counterexample_indices.empty()) {
            out << "counterexample_indices=";
            for (size_t i = 0; i < rep.counterexample_indices.size(); ++i) {
                if (i) out << ",";
                out << rep.counterexample_indices[i];
            }
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"edge coloring of signed graphs in the incidence model", "sgcolor"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports instead of text");

    ColorArgs color_args;
    auto* color_cmd = app.add_subcommand("color", "produce a proper incidence coloring");
    color_cmd->add_option("input", color_args.input, "signed graph file")->required();
    color_cmd
        ->add_option("--method", color_args.method,
                     "auto|exact|cactus|wheel|necklace|bipartite|cycle|path")
        ->check(CLI::IsMember(
            {"auto", "exact", "cactus", "wheel", "necklace", "bipartite", "cycle", "path"}));
    color_cmd->add_option("-o,--output", color_args.output, "write the coloring to this file");
    color_cmd->add_flag("--force", color_args.force, "ignore the exact-solver edge budget");
    color_cmd->add_flag("--json", as_json, "emit a JSON report");

    ChromaticArgs chrom_args;
    auto* chrom_cmd = app.add_subcommand("chromatic-index", "compute delta and chi");
    chrom_cmd->add_option("input", chrom_args.input, "signed graph file")->required();
    chrom_cmd->add_option("-o,--output", chrom_args.output, "write a witness coloring here");
    chrom_cmd->add_flag("--force", chrom_args.force, "ignore the exact-solver edge budget");
    chrom_cmd->add_flag("--json", as_json, "emit a JSON report");

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "signed class of the underlying graph");
    classify_cmd->add_option("input", classify_args.input, "signed graph file")->required();
    classify_cmd->add_flag("--structural-only", classify_args.structural_only,
                           "skip enumeration; run only the matching test");
    classify_cmd->add_flag("--naive", classify_args.naive, "sweep all 2^m signatures");
    classify_cmd->add_option("--budget", classify_args.budget,
                             "max independent cycles (edges when naive)");
    classify_cmd->add_option("--jobs", classify_args.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--force", classify_args.force, "ignore the exact-solver edge budget");
    classify_cmd->add_flag("--json", as_json, "emit a JSON report");

    RatioArgs ratio_args;
    auto* ratio_cmd = app.add_subcommand("ratio", "fraction of switching classes colorable at delta");
    ratio_cmd->add_option("input", ratio_args.input, "signed graph file")->required();
    ratio_cmd->add_flag("--naive", ratio_args.naive, "sweep all 2^m signatures");
    ratio_cmd->add_option("--budget", ratio_args.budget,
                          "max independent cycles (edges when naive)");
    ratio_cmd->add_option("--jobs", ratio_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    ratio_cmd->add_flag("--force", ratio_args.force, "ignore the exact-solver edge budget");
    ratio_cmd->add_flag("--json", as_json, "emit a JSON report");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family instance");
    gen_cmd->add_option("family", gen_args.family,
                        "path|cycle|star|wheel|necklace|complete_bipartite|random_cactus|class2pm")
        ->required();
    gen_cmd->add_option("params", gen_args.raw_params, "family parameters (ints, commas ok)");
    gen_cmd->add_option("--sign", gen_args.sign_mode, "all_positive|all_negative|random|index")
        ->check(CLI::IsMember({"all_positive", "all_negative", "random", "index"}));
    gen_cmd->add_option("--seed", gen_args.seed, "seed for random growth and random signs");
    gen_cmd->add_option("--index", gen_args.index, "signature index for --sign index");
    gen_cmd->add_option("--cycle-prob", gen_args.cycle_prob, "random_cactus cycle probability");
    gen_cmd->add_option("--max-cycle-len", gen_args.max_cycle_len, "random_cactus cycle cap");
    gen_cmd->add_option("-o,--output", gen_args.output, "write the graph to this file");
    gen_cmd->add_flag("--json", as_json, "emit a JSON report");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
    verify_cmd->add_option("graph", verify_args.graph, "signed graph file")->required();
    verify_cmd->add_option("coloring", verify_args.coloring, "coloring file")->required();
    verify_cmd->add_flag("--json", as_json, "emit a JSON report");

    SwitchArgs switch_args;
    auto* switch_cmd = app.add_subcommand("switch", "negate signs across a vertex cut");
    switch_cmd->add_option("graph", switch_args.graph, "signed graph file")->required();
    switch_cmd->add_option("--vertices", switch_args.vertices, "1-indexed, comma-separated")
        ->required();
    switch_cmd->add_option("-o,--output", switch_args.output, "write the result to this file");
    switch_cmd->add_flag("--json", as_json, "emit a JSON report");

    ProbeArgs probe_args;
    auto* probe_cmd = app.add_subcommand("probe-conjecture",
                                         "test the K_{r,r} parity prediction");
    probe_cmd->add_option("r", probe_args.r, "part size")->required()->check(CLI::PositiveNumber);
    probe_cmd->add_option("--trials", probe_args.trials, "signatures to test (default 256)")
        ->check(CLI::PositiveNumber);
    probe_cmd->add_option("--seed", probe_args.seed, "sampling seed");
    probe_cmd->add_option("--jobs", probe_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    probe_cmd->add_flag("--force", probe_args.force, "ignore the exact-solver edge budget");
    probe_cmd->add_flag("--json", as_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    // --index presence matters for gen's sign mode.
    gen_args.index_set = gen_cmd->count("--index") > 0;

    try {
        if (color_cmd->parsed()) return do_color(color_args, as_json, out);
        if (chrom_cmd->parsed()) return do_chromatic_index(chrom_args, as_json, out);
        if (classify_cmd->parsed()) return do_classify(classify_args, as_json, out, err);
        if (ratio_cmd->parsed()) return do_ratio(ratio_args, as_json, out);
        if (gen_cmd->parsed()) return do_gen(gen_args, as_json, out);
        if (verify_cmd->parsed()) return do_verify(verify_args, as_json, out);
        if (switch_cmd->parsed()) return do_switch(switch_args, as_json, out);
        if (probe_cmd->parsed()) return do_probe(probe_args, as_json, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace sgc
