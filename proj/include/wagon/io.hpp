#pragma once

#include "wagon/exact.hpp"
#include "wagon/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace wagon {

/// DIMACS .col: "c" comment lines, one "p edge <n> <m>" line, then
/// "e <u> <v>" lines with 1-based endpoints. Parse errors carry the line
/// number.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

/// Plain edge list: one "u v" pair per line, 0-based; blank lines and '#'
/// comments are ignored. The vertex count is max id + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Detects DIMACS by a leading 'p'/'c' line, otherwise reads an edge list.
Graph read_graph_auto(std::istream& in);

/// Reads a graph file, or resolves a fixture tag when no such file exists.
Graph load_graph_or_fixture(const std::string& path_or_fixture);

/// Undirected DOT output for visual inspection; when a colouring is given,
/// vertices are filled from a small colour wheel keyed by colour index.
void write_dot(std::ostream& out, const Graph& g, const Colouring* col = nullptr);

/// Colouring file: one "v colour" pair per line (0-based vertex), '#'
/// comments ignored. Every vertex must receive a colour.
Colouring read_colouring(std::istream& in, int vertex_count);
void write_colouring(std::ostream& out, const Colouring& col);

} // namespace wagon
