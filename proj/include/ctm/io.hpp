#ifndef CTM_IO_HPP
#define CTM_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

// Structured text format for graphs.  A document carries format_version,
// colors, and either (white, perms) or components (nested documents); an
// optional prop0 array of [white, black] pairs marks an open graph.
// Serialization is canonical: sorted keys, no whitespace, so re-serialization
// is byte-stable.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyGraph = std::variant<ColoredGraph, OpenFeynmanGraph>;

std::string serialize(const ColoredGraph& g, const std::string& name = "");
std::string serialize(const OpenFeynmanGraph& g, const std::string& name = "");
std::string serialize(const DisconnectedGraph& d, const std::string& name = "");

AnyGraph parse_graph_document(const std::string& text);
ColoredGraph parse_closed(const std::string& text);   // rejects open documents
OpenFeynmanGraph parse_open(const std::string& text); // requires a prop0 key

// Array-of-documents helpers (enumeration cache files).
std::string serialize_graph_list(const std::vector<ColoredGraph>& graphs);
std::vector<ColoredGraph> parse_graph_list(const std::string& text);

// Graphviz description: white/black vertices as node shapes, colors as edge
// labels; color 0 edges dashed; external legs as half-edges.
std::string to_dot(const ColoredGraph& g);
std::string to_dot(const OpenFeynmanGraph& g);

}  // namespace ctm

#endif  // CTM_IO_HPP
