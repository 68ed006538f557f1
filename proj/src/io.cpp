#include "sgcolor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace sgc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

[[noreturn]] void syntax(int line, const std::string& what) {
    throw Error(Errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        syntax(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

// Walks lines, tracking 1-based numbers; strips nothing else.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        fn(text.substr(pos, end - pos), line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

void read_metadata(std::string_view line, std::map<std::string, std::string>& meta) {
    // "c key=value" records metadata; other comments are skipped.
    std::string_view rest = line.substr(1);
    size_t start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) return;
    size_t endr = rest.find_last_not_of(" \t\r");
    rest = rest.substr(start, endr - start + 1);
    size_t eq = rest.find('=');
    if (eq == std::string_view::npos || eq == 0) return;
    meta[std::string(rest.substr(0, eq))] = std::string(rest.substr(eq + 1));
}

}  // namespace

ParsedSignedGraph parse_signed_graph(std::string_view text) {
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<EdgeEnds> ends;
    std::vector<std::int8_t> signs;
    std::map<std::string, std::string> metadata;

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto tokens = split_ws(line);
        if (tokens.empty()) return;
        if (tokens[0] == "c") {
            read_metadata(line, metadata);
            return;
        }
        if (tokens[0] == "p") {
            if (have_header) syntax(line_no, "second 'p' header");
            if (tokens.size() != 4 || tokens[1] != "signed")
                syntax(line_no, "header must read 'p signed <vertices> <edges>'");
            n = parse_int(tokens[2], line_no);
            m = parse_int(tokens[3], line_no);
            if (n < 1) syntax(line_no, "vertex count must be at least 1");
            if (m < 0) syntax(line_no, "edge count must be nonnegative");
            have_header = true;
            return;
        }
        if (tokens[0] == "e") {
            if (!have_header) syntax(line_no, "edge line before 'p' header");
            if (tokens.size() != 4) syntax(line_no, "edge lines read 'e <u> <v> <+|->'");
            long long u = parse_int(tokens[1], line_no);
            long long v = parse_int(tokens[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                syntax(line_no, "vertex out of range 1.." + std::to_string(n));
            int8_t sign;
            if (tokens[3] == "+")
                sign = 1;
            else if (tokens[3] == "-")
                sign = -1;
            else
                throw Error(Errc::bad_sign, "line " + std::to_string(line_no) +
                                                ": sign must be '+' or '-', got '" +
                                                std::string(tokens[3]) + "'");
            ends.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
            signs.push_back(sign);
            return;
        }
        syntax(line_no, "unknown record '" + std::string(tokens[0]) + "'");
    });

    if (!have_header) throw Error(Errc::syntax_error, "missing 'p signed' header");
    if (static_cast<long long>(ends.size()) != m)
        throw Error(Errc::header_mismatch,
                    "header says " + std::to_string(m) + " edges, found " +
                        std::to_string(ends.size()) + " edge lines");
    return {SignedGraph(Graph(static_cast<int>(n), std::move(ends)), Signature(std::move(signs))),
            std::move(metadata)};
}

std::string serialize_signed_graph(const SignedGraph& sg,
                                   const std::map<std::string, std::string>& metadata) {
    std::ostringstream out;
    for (const auto& [key, value] : metadata) out << "c " << key << "=" << value << "\n";
    out << "p signed " << sg.graph.vertex_count() << " " << sg.graph.edge_count() << "\n";
    for (EdgeId e = 0; e < sg.graph.edge_count(); ++e) {
        const EdgeEnds& ee = sg.graph.edge(e);
        out << "e " << ee.u + 1 << " " << ee.v + 1 << " "
            << (sg.signature.sign(e) == 1 ? "+" : "-") << "\n";
    }
    return out.str();
}

IncidenceColoring parse_coloring(std::string_view text, const Graph& g) {
    bool have_header = false;
    long long n_colors = 0;
    int records = 0;
    IncidenceColoring col(0, g.edge_count());

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") return;
        if (tokens[0] == "n") {
            if (have_header) syntax(line_no, "second 'n' header");
            if (tokens.size() != 2) syntax(line_no, "header must read 'n <colors>'");
            n_colors = parse_int(tokens[1], line_no);
            if (n_colors < 0) syntax(line_no, "color count must be nonnegative");
            have_header = true;
            col = IncidenceColoring(static_cast<int>(n_colors), g.edge_count());
            return;
        }
        if (tokens[0] == "i") {
            if (!have_header) syntax(line_no, "incidence record before 'n' header");
            if (tokens.size() != 5)
                syntax(line_no, "incidence records read 'i <vertex> <u> <v> <color>'");
            long long v = parse_int(tokens[1], line_no);
            long long a = parse_int(tokens[2], line_no);
            long long b = parse_int(tokens[3], line_no);
            long long c = parse_int(tokens[4], line_no);
            int nv = g.vertex_count();
            if (v < 1 || v > nv || a < 1 || a > nv || b < 1 || b > nv)
                syntax(line_no, "vertex out of range 1.." + std::to_string(nv));
            auto e = g.find_edge(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1));
            if (!e)
                syntax(line_no, "the graph has no edge " + std::to_string(a) + "-" +
                                    std::to_string(b));
            if (v != a && v != b)
                syntax(line_no, "vertex " + std::to_string(v) + " is not an endpoint of " +
                                    std::to_string(a) + "-" + std::to_string(b));
            if (c < std::numeric_limits<int>::min() / 2 || c > std::numeric_limits<int>::max() / 2)
                syntax(line_no, "color out of range");
            VertexId vv = static_cast<VertexId>(v - 1);
            if (col.at(g, vv, *e) != IncidenceColoring::kUnset)
                syntax(line_no, "duplicate record for this incidence");
            col.set(g, vv, *e, static_cast<int>(c));
            ++records;
            return;
        }
        syntax(line_no, "unknown record '" + std::string(tokens[0]) + "'");
    });

    if (!have_header) throw Error(Errc::syntax_error, "missing 'n' header");
    if (records != 2 * g.edge_count())
        throw Error(Errc::header_mismatch,
                    "expected " + std::to_string(2 * g.edge_count()) + " incidence records, found " +
                        std::to_string(records));
    return col;
}

std::string serialize_coloring(const Graph& g, const IncidenceColoring& c) {
    if (c.edge_count() != g.edge_count())
        throw Error(Errc::domain_mismatch, "coloring covers " + std::to_string(c.edge_count()) +
                                               " edges, graph has " +
                                               std::to_string(g.edge_count()));
    std::ostringstream out;
    out << "n " << c.n_colors() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeEnds& ee = g.edge(e);
        VertexId lo = std::min(ee.u, ee.v), hi = std::max(ee.u, ee.v);
        for (VertexId v : {lo, hi}) {
            int color = c.at(g, v, e);
            if (color == IncidenceColoring::kUnset)
                throw Error(Errc::invalid_coloring,
                            "incidence (" + std::to_string(v + 1) + ", " + std::to_string(ee.u + 1) +
                                "-" + std::to_string(ee.v + 1) + ") is uncolored");
            out << "i " << v + 1 << " " << ee.u + 1 << " " << ee.v + 1 << " " << color << "\n";
        }
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::invalid_argument, "cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(Errc::invalid_argument, "failed reading " + path);
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::invalid_argument, "cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(Errc::invalid_argument, "failed writing " + path);
}

}  // namespace sgc
