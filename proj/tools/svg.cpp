#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace compatri::svgout {

namespace {

struct Box {
  i64 min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

Box bounds(const Polygon& p) {
  Box b{p[0].x, p[0].y, p[0].x, p[0].y};
  for (const Point& v : p.vertices()) {
    b.min_x = std::min(b.min_x, v.x);
    b.min_y = std::min(b.min_y, v.y);
    b.max_x = std::max(b.max_x, v.x);
    b.max_y = std::max(b.max_y, v.y);
  }
  return b;
}

// SVG y grows downward; flip around the box so the polygon keeps its shape.
void emit_polygon(std::ostringstream& out, const Polygon& p,
                  const std::vector<IndexPair>& diagonals, i64 dx, i64 flip_y) {
  auto X = [&](const Point& v) { return v.x + dx; };
  auto Y = [&](const Point& v) { return flip_y - v.y; };

  out << "<polygon points=\"";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << " ";
    out << X(p[i]) << "," << Y(p[i]);
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";

  auto sorted = diagonals;
  std::sort(sorted.begin(), sorted.end());
  for (const IndexPair& d : sorted) {
    out << "<line x1=\"" << X(p[d.a]) << "\" y1=\"" << Y(p[d.a]) << "\" x2=\""
        << X(p[d.b]) << "\" y2=\"" << Y(p[d.b])
        << "\" stroke=\"crimson\" stroke-width=\"1\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";
  }
  for (int i = 0; i < p.size(); ++i) {
    out << "<circle cx=\"" << X(p[i]) << "\" cy=\"" << Y(p[i])
        << "\" r=\"1\" fill=\"black\"/>\n";
    out << "<text x=\"" << X(p[i]) << "\" y=\"" << Y(p[i])
        << "\" font-size=\"4\" dx=\"2\" dy=\"-2\">" << i << "</text>\n";
  }
}

std::string document(const std::string& body, i64 x, i64 y, i64 w, i64 h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x << " " << y << " "
      << w << " " << h << "\">\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const Polygon& p, const std::vector<IndexPair>& diagonals) {
  Box b = bounds(p);
  std::ostringstream body;
  emit_polygon(body, p, diagonals, 0, b.max_y + b.min_y);
  i64 margin = std::max<i64>((b.max_x - b.min_x + b.max_y - b.min_y) / 10, 4);
  return document(body.str(), b.min_x - margin, b.min_y - margin,
                  (b.max_x - b.min_x) + 2 * margin, (b.max_y - b.min_y) + 2 * margin);
}

std::string render_pair(const Polygon& p, const Polygon& q,
                        const std::vector<IndexPair>& diagonals) {
  Box bp = bounds(p), bq = bounds(q);
  i64 gap = std::max<i64>((bp.max_x - bp.min_x) / 5, 4);
  i64 dx = (bp.max_x - bq.min_x) + gap;
  std::ostringstream body;
  emit_polygon(body, p, diagonals, 0, bp.max_y + bp.min_y);
  emit_polygon(body, q, diagonals, dx, bq.max_y + bq.min_y);
  i64 min_x = std::min(bp.min_x, bq.min_x + dx);
  i64 max_x = std::max(bp.max_x, bq.max_x + dx);
  i64 min_y = std::min(bp.min_y, bq.min_y);
  i64 max_y = std::max(bp.max_y, bq.max_y);
  i64 margin = std::max<i64>((max_x - min_x + max_y - min_y) / 10, 4);
  return document(body.str(), min_x - margin, min_y - margin,
                  (max_x - min_x) + 2 * margin, (max_y - min_y) + 2 * margin);
}

}  // namespace compatri::svgout
