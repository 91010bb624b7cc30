#pragma once

#include "eocd/graph.hpp"

#include <iosfwd>
#include <string>

namespace eocd {

// Edge-list text format:
//
//   # comment lines and trailing "# ..." are ignored
//   n m
//   u v            (m lines, 0-based)
//   L v name       (optional label lines, after the edges)
//
// Readers throw eocd::Error with the offending line number.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace eocd
