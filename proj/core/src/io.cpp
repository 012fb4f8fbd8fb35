#include "compatri/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace compatri::io {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(Error::Kind::Parse,
              "parse error at line " + std::to_string(line) + ": " + what);
}

// Reads the next non-empty, non-comment line; returns false at EOF.
bool next_line(std::istream& in, std::string& out, int& lineno) {
  while (std::getline(in, out)) {
    ++lineno;
    size_t pos = out.find('#');
    if (pos != std::string::npos) out.erase(pos);
    bool blank = out.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, size_t count, int lineno) {
  std::istringstream ss(line);
  std::vector<long long> vals;
  long long v;
  while (ss >> v) vals.push_back(v);
  std::string rest;
  if (ss.clear(), ss >> rest)
    parse_fail(lineno, "trailing characters '" + rest + "'");
  if (vals.size() != count)
    parse_fail(lineno, "expected " + std::to_string(count) + " integers");
  return vals;
}

}  // namespace

std::vector<Point> read_polygon_points(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) parse_fail(1, "missing vertex count");
  long long n = parse_ints(line, 1, lineno)[0];
  if (n < 3) parse_fail(lineno, "vertex count must be at least 3");
  std::vector<Point> pts;
  pts.reserve(size_t(n));
  for (long long i = 0; i < n; ++i) {
    if (!next_line(in, line, lineno))
      parse_fail(lineno + 1, "expected " + std::to_string(n) + " vertices");
    auto v = parse_ints(line, 2, lineno);
    pts.push_back(Point{v[0], v[1]});
  }
  if (next_line(in, line, lineno)) parse_fail(lineno, "unexpected extra line");
  return pts;
}

Polygon read_polygon(std::istream& in) { return Polygon::validate(read_polygon_points(in)); }

Polygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::Io, "cannot open " + path);
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const Polygon& p) {
  out << p.size() << "\n";
  for (const Point& v : p.vertices()) out << v.x << " " << v.y << "\n";
}

std::vector<IndexPair> read_diagonals(std::istream& in, int n) {
  std::vector<IndexPair> out;
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    auto v = parse_ints(line, 2, lineno);
    if (v[0] < 0 || v[0] >= n || v[1] < 0 || v[1] >= n || v[0] == v[1])
      parse_fail(lineno, "vertex index out of range");
    out.push_back(IndexPair::of(int(v[0]), int(v[1])));
  }
  return out;
}

std::vector<IndexPair> read_diagonals_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::Io, "cannot open " + path);
  return read_diagonals(in, n);
}

void write_diagonals(std::ostream& out, const std::vector<IndexPair>& diagonals) {
  auto sorted = diagonals;
  std::sort(sorted.begin(), sorted.end());
  for (const IndexPair& d : sorted) out << d.a << " " << d.b << "\n";
}

AdjacencyMatrix read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) parse_fail(1, "missing vertex count");
  long long n = parse_ints(line, 1, lineno)[0];
  if (n < 3) parse_fail(lineno, "vertex count must be at least 3");
  AdjacencyMatrix a = AdjacencyMatrix::polygon_cycle(int(n));
  while (next_line(in, line, lineno)) {
    auto v = parse_ints(line, 2, lineno);
    if (v[0] < 0 || v[0] >= n || v[1] < 0 || v[1] >= n || v[0] == v[1])
      parse_fail(lineno, "vertex index out of range");
    a.set(int(v[0]), int(v[1]));
  }
  return a;
}

AdjacencyMatrix read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::Io, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const AdjacencyMatrix& a) {
  const int n = a.size();
  out << n << "\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (a.at(i, j)) out << i << " " << j << "\n";
    }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Error::Kind::Io, "cannot write " + path);
  out << content;
}

std::string file_digest(const std::string& path) {
  std::string bytes = read_file(path);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace compatri::io
