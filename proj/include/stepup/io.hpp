#pragma once

// Text formats:
//
//   hypergraph k v        coloring k N          lift k N
//   0 1 2                 0 1 2                 <base object>
//   ...                   ... (red subsets)
//
// One k-subset per line, ascending indices; blank lines and '#' comments
// are ignored. Writers emit subsets in lexicographic order, so reading and
// writing round-trips bit-exactly. A lift embeds its base object: a
// 3-uniform coloring for k = 4, a (k-1)-graph for k >= 5.

#include <iosfwd>
#include <optional>
#include <string>

#include "stepup/certificate.hpp"
#include "stepup/coloring.hpp"
#include "stepup/hypergraph.hpp"

namespace stepup {

enum class ObjectKind { hypergraph, coloring };

struct LoadedObject {
    ObjectKind kind = ObjectKind::hypergraph;
    // Set for hypergraphs and k >= 5 lifts.
    std::optional<Hypergraph> graph;
    // Set for colorings and k = 4 lifts.
    std::optional<TwoColoring> coloring;
    // Certificate construction descriptor: rule, parameters, digests.
    Json descriptor;
    // Canonical serialization.
    std::string text;
};

// Parse errors are InputErrors of the form "<source>:<line>: <message>".
LoadedObject parse_object(std::istream& in, const std::string& source = "<input>");
LoadedObject parse_object_text(const std::string& text, const std::string& source = "<input>");

// "-" reads `stdin_stream`.
LoadedObject load_object(const std::string& path, std::istream& stdin_stream);

Hypergraph parse_hypergraph(const std::string& text, const std::string& source = "<input>");
TwoColoring parse_coloring(const std::string& text, const std::string& source = "<input>");

std::string format_hypergraph(const Hypergraph& h);
// Explicit colorings only; lifted colorings are written with format_lift.
std::string format_coloring(const TwoColoring& c);
std::string format_lift(int k, const std::string& base_text);

std::string read_text(std::istream& in);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace stepup
