#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compatri/interval_dp.hpp"

namespace compatri::io {

// Polygon file: line 1 the vertex count, then one "x y" pair per line, CCW.
std::vector<Point> read_polygon_points(std::istream& in);
Polygon read_polygon(std::istream& in);
Polygon read_polygon_file(const std::string& path);
void write_polygon(std::ostream& out, const Polygon& p);

// Triangulation file: one "i j" line per diagonal, canonical and sorted.
std::vector<IndexPair> read_diagonals(std::istream& in, int n);
std::vector<IndexPair> read_diagonals_file(const std::string& path, int n);
void write_diagonals(std::ostream& out, const std::vector<IndexPair>& diagonals);

// Graph file: line 1 the vertex count, then one "i j" line per extra
// diagonal; polygon boundary edges are implicit.
AdjacencyMatrix read_graph(std::istream& in);
AdjacencyMatrix read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const AdjacencyMatrix& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a digest of a file's bytes, for run reports.
std::string file_digest(const std::string& path);

}  // namespace compatri::io
