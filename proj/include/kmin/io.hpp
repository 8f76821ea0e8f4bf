#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/graph.hpp"

namespace kmin {

/// graph6 codec (sizes up to 258047). Throws Parse on malformed input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n m" header followed by m lines "u v". Blank lines and '#' comments are
/// ignored.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// "n m" header followed by m lines "u v multiplicity".
std::string to_multi_edge_list(const MultiGraph& g);
MultiGraph parse_multi_edge_list(std::string_view text);

/// {"n":..., "edges":[[u,v],...], "labels":[...]}; labels optional on input.
std::string to_json(const LabeledGraph& g);
LabeledGraph parse_json_graph(std::string_view text);

enum class GraphFormat { Auto, Graph6, EdgeList, Json };

GraphFormat parse_format(std::string_view name);
/// Auto: '{' means JSON, a leading "n m" line means edge list, else graph6.
LabeledGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Non-empty, non-comment lines of a graph6 stream (header lines skipped).
std::vector<std::string> graph6_lines(std::istream& in);

}  // namespace kmin
