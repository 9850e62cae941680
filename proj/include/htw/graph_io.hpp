#pragma once

#include <iosfwd>
#include <string>

#include "htw/graph.hpp"

namespace htw {

/// Plain-text graph format:
///
///   # comment lines start with '#'
///   p <n> <m>
///   <u> <v>        (m lines, 0-based endpoints, no duplicates or loops)
///
/// Malformed input raises std::runtime_error with a line reference.
Graph read_graph(std::istream& in, const std::string& source_name = "<stream>");
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace htw
