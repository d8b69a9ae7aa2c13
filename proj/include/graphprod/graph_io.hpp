#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphprod/graph.hpp"

namespace graphprod {

/// Line-oriented labeled-graph format:
///
///     # comment
///     vertex <name> <abelian-label>
///     edge <u> <v>
///
/// Names match [A-Za-z][A-Za-z0-9_.]*. Blank lines are ignored. Vertices must
/// be declared before use. Throws ParseError (with line and column) on any
/// syntactic or structural problem, including an empty graph.
LabeledGraph parse_graph(std::string_view text);

/// Throws std::runtime_error if the file cannot be read.
LabeledGraph read_graph_file(const std::filesystem::path& path);

/// Vertices in graph order with invariant-factor labels, then edges sorted
/// by vertex-index pair. Ends with a newline.
std::string serialize(const LabeledGraph& g);

bool is_valid_vertex_name(std::string_view name);

}  // namespace graphprod
