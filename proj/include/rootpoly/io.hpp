#pragma once

#include <optional>
#include <string>

#include "rootpoly/digraph.hpp"
#include "rootpoly/pointloc.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// Graph text format, one graph per file:
///   vertices N
///   arc <id> <tail> <head>
/// optionally followed by a ribbon and basis:
///   rot <v> <arc ids in cyclic order>
///   basis <v> <arc id>
/// '#' starts a comment. Round-trips bit-exactly through format_graph_file.
struct GraphFile {
    DirectedGraph graph;
    std::optional<RibbonStructure> ribbon;
    std::optional<Basis> basis;
};

GraphFile parse_graph_file(const std::string& text);
std::string format_graph_file(const DirectedGraph& g,
                              const RibbonStructure* ribbon = nullptr,
                              const Basis* basis = nullptr);

/// Point file: lines `coord <vertex> <numerator>/<denominator>`;
/// unspecified vertices are 0.
RationalVector parse_point_file(const std::string& text, int vertex_count);
std::string format_point_file(const RationalVector& p);

/// Hypertree file: lines `ht <vertex> <value>`; the side comes from the CLI.
Hypertree parse_hypertree_file(const std::string& text, int vertex_count, Side side);
std::string format_hypertree_file(const Hypertree& h);

std::string read_file(const std::string& path);

}  // namespace rootpoly
