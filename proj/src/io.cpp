#include "stepup/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stepup/coloring.hpp"
#include "stepup/er_lift.hpp"
#include "stepup/error.hpp"

namespace stepup {

namespace {

constexpr std::uint64_t max_explicit_subsets = EdgeSet::max_subsets;

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        Line line{number, {}};
        std::string w;
        while (words >> w) {
            line.tokens.push_back(w);
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& message)
{
    throw InputError(source + ":" + std::to_string(line) + ": " + message);
}

std::uint64_t parse_number(const std::string& token, const std::string& source, std::size_t line)
{
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        fail(source, line, "expected a non-negative integer, got '" + token + "'");
    }
    return value;
}

struct Header {
    std::string kind;
    int k = 0;
    std::uint64_t v = 0;
};

Header parse_header(const Line& line, const std::string& source)
{
    if (line.tokens.size() != 3) {
        fail(source, line.number, "expected header 'hypergraph k v', 'coloring k N' or 'lift k N'");
    }
    Header h;
    h.kind = line.tokens[0];
    if (h.kind != "hypergraph" && h.kind != "coloring" && h.kind != "lift") {
        fail(source, line.number, "unknown object type '" + h.kind + "'");
    }
    const auto k = parse_number(line.tokens[1], source, line.number);
    h.v = parse_number(line.tokens[2], source, line.number);
    if (k < 1 || k > 32) {
        fail(source, line.number, "uniformity must be in 1..32");
    }
    h.k = static_cast<int>(k);
    return h;
}

EdgeSet parse_edges(const Header& h, std::span<const Line> body, const std::string& source)
{
    if (static_cast<std::uint64_t>(h.k) > h.v) {
        if (!body.empty()) {
            fail(source, body.front().number, "no " + std::to_string(h.k) + "-subsets exist on "
                                                  + std::to_string(h.v) + " vertices");
        }
    }
    if (h.v > 0 && static_cast<std::uint64_t>(h.k) <= h.v
        && binomial(h.v, static_cast<std::uint64_t>(h.k)) > max_explicit_subsets) {
        throw InputError(source + ": explicit " + h.kind + " too large (more than 2^30 subsets)");
    }
    EdgeSet edges(h.k, h.v);
    std::vector<Vertex> e(static_cast<std::size_t>(h.k));
    for (const auto& line : body) {
        if (line.tokens.size() != static_cast<std::size_t>(h.k)) {
            fail(source, line.number, "expected " + std::to_string(h.k) + " vertices, got "
                                          + std::to_string(line.tokens.size()));
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = parse_number(line.tokens[i], source, line.number);
            if (e[i] >= h.v) {
                fail(source, line.number, "vertex " + std::to_string(e[i]) + " outside [0, " + std::to_string(h.v)
                                              + ")");
            }
            if (i > 0 && e[i] <= e[i - 1]) {
                fail(source, line.number, "vertices must be strictly increasing");
            }
        }
        const auto rank = colex_rank(e);
        if (edges.test_rank(rank)) {
            fail(source, line.number, "duplicate subset");
        }
        edges.set_rank(rank, true);
    }
    return edges;
}

std::string format_subsets(const std::string& header, const Hypergraph& h)
{
    auto edges = h.edges(max_explicit_subsets);
    std::sort(edges.begin(), edges.end());
    std::string out = header + "\n";
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

LoadedObject parse_lines(std::span<const Line> lines, const std::string& source)
{
    if (lines.empty()) {
        throw InputError(source + ":1: empty input");
    }
    const Header h = parse_header(lines.front(), source);
    const auto body = lines.subspan(1);
    LoadedObject out;

    if (h.kind == "hypergraph") {
        out.kind = ObjectKind::hypergraph;
        out.graph = Hypergraph::from_edge_set(parse_edges(h, body, source));
        out.text = format_hypergraph(*out.graph);
        out.descriptor = {{"rule", "explicit"},
                          {"object", "hypergraph"},
                          {"uniformity", h.k},
                          {"ground_size", h.v},
                          {"digest", digest(out.text)}};
        return out;
    }
    if (h.kind == "coloring") {
        out.kind = ObjectKind::coloring;
        out.coloring = TwoColoring(Hypergraph::from_edge_set(parse_edges(h, body, source)));
        out.text = format_coloring(*out.coloring);
        out.descriptor = {{"rule", "explicit"},
                          {"object", "coloring"},
                          {"uniformity", h.k},
                          {"ground_size", h.v},
                          {"digest", digest(out.text)}};
        return out;
    }

    // lift k N followed by the base object.
    if (body.empty()) {
        fail(source, lines.front().number, "lift is missing its base object");
    }
    if (h.v < 1 || h.v > 63) {
        fail(source, lines.front().number, "lift base width must be in 1..63");
    }
    const auto base = parse_lines(body, source);
    const std::size_t base_line = body.front().number;
    const auto base_ground = base.kind == ObjectKind::coloring ? base.coloring->ground_size() : base.graph->ground_size();
    if (base_ground != h.v) {
        fail(source, base_line, "base ground size " + std::to_string(base_ground) + " does not match lift width "
                                    + std::to_string(h.v));
    }
    if (base.descriptor.value("rule", "") != "explicit") {
        fail(source, base_line, "lift base must be an explicit object");
    }
    out.text = format_lift(h.k, base.text);
    out.descriptor = {{"rule", "lift"},
                      {"uniformity", h.k},
                      {"base_ground_size", h.v},
                      {"ground_size", std::uint64_t{1} << h.v},
                      {"base_digest", digest(base.text)},
                      {"digest", digest(out.text)}};
    if (h.k == 4) {
        if (base.kind != ObjectKind::coloring) {
            fail(source, base_line, "a k=4 lift needs a 3-uniform coloring base");
        }
        if (base.coloring->uniformity() != 3) {
            fail(source, base_line, "base uniformity: a k=4 lift needs a 3-uniform coloring");
        }
        out.kind = ObjectKind::coloring;
        out.coloring = lift_coloring(*base.coloring);
        return out;
    }
    if (h.k < 4) {
        fail(source, lines.front().number, "lift uniformity must be at least 4");
    }
    if (base.kind != ObjectKind::hypergraph) {
        fail(source, base_line, "a k>=5 lift needs a hypergraph base");
    }
    if (base.graph->uniformity() != h.k - 1) {
        fail(source, base_line, "base uniformity: a k=" + std::to_string(h.k) + " lift needs a "
                                    + std::to_string(h.k - 1) + "-graph");
    }
    out.kind = ObjectKind::hypergraph;
    out.graph = lift_hypergraph(LiftRule(h.k, *base.graph));
    return out;
}

} // namespace

LoadedObject parse_object_text(const std::string& text, const std::string& source)
{
    const auto lines = tokenize(text);
    return parse_lines(lines, source);
}

LoadedObject parse_object(std::istream& in, const std::string& source)
{
    return parse_object_text(read_text(in), source);
}

LoadedObject load_object(const std::string& path, std::istream& stdin_stream)
{
    if (path == "-") {
        return parse_object(stdin_stream, "<stdin>");
    }
    return parse_object_text(read_file(path), path);
}

Hypergraph parse_hypergraph(const std::string& text, const std::string& source)
{
    auto obj = parse_object_text(text, source);
    if (!obj.graph) {
        throw InputError(source + ": expected a hypergraph");
    }
    return *obj.graph;
}

TwoColoring parse_coloring(const std::string& text, const std::string& source)
{
    auto obj = parse_object_text(text, source);
    if (!obj.coloring) {
        throw InputError(source + ": expected a coloring");
    }
    return *obj.coloring;
}

std::string format_hypergraph(const Hypergraph& h)
{
    return format_subsets("hypergraph " + std::to_string(h.uniformity()) + " " + std::to_string(h.ground_size()), h);
}

std::string format_coloring(const TwoColoring& c)
{
    if (c.is_lifted()) {
        throw InputError("format_coloring: lifted colorings are written as lift descriptors");
    }
    return format_subsets("coloring " + std::to_string(c.uniformity()) + " " + std::to_string(c.ground_size()),
                          c.red());
}

std::string format_lift(int k, const std::string& base_text)
{
    const auto lines = tokenize(base_text);
    if (lines.empty()) {
        throw InputError("format_lift: empty base");
    }
    const std::string width = lines.front().tokens.size() == 3 ? lines.front().tokens[2] : "?";
    return "lift " + std::to_string(k) + " " + width + "\n" + base_text;
}

std::string read_text(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return read_text(in);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw InputError("write failed for '" + path + "'");
    }
}

} // namespace stepup
