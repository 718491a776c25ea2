#include "ineq/geometry.hpp"

namespace ineq {

Line Line::from_coeffs(Rational a, Rational b, Rational c) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("line: a and b cannot both be zero");
  const Rational& scale = a.is_zero() ? b : a;
  return Line(a / scale, b / scale, c / scale);
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line: two distinct points required");
  // (y1 - y2) x + (x2 - x1) y + (x1 y2 - x2 y1) = 0
  return from_coeffs(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

Polygon Polygon::from_vertices(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == vertices[(i + 1) % vertices.size()])
      throw std::invalid_argument("polygon: consecutive vertices coincide at index " + std::to_string(i));
  return Polygon(std::move(vertices));
}

Point line_line_intersection(const Line& l1, const Line& l2) {
  Rational det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) {
    if (l1.same_line(l2))
      throw GeomError(GeomError::Kind::CoincidentLines, "intersection: lines coincide");
    throw GeomError(GeomError::Kind::ParallelLines, "intersection: lines are parallel");
  }
  // Cramer on  a1 x + b1 y = -c1,  a2 x + b2 y = -c2
  Rational x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  Rational y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return Point{std::move(x), std::move(y)};
}

Rational collinear_ratio(const Point& m, const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("collinear_ratio: segment endpoints coincide");
  if (m == a || m == b)
    throw GeomError(GeomError::Kind::CoincidesWithEndpoint,
                    "collinear_ratio: point coincides with an endpoint");
  Rational cross = (a.x - m.x) * (b.y - m.y) - (a.y - m.y) * (b.x - m.x);
  if (!cross.is_zero())
    throw GeomError(GeomError::Kind::NonCollinear, "collinear_ratio: points are not collinear");
  // ratio of distances along the common line = ratio of coordinate gaps
  if (a.x != b.x) return abs(m.x - a.x) / abs(m.x - b.x);
  return abs(m.y - a.y) / abs(m.y - b.y);
}

Transversal transversal_points(const Polygon& polygon, const Line& line) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i)
    if (line.contains(polygon.vertex(i)))
      throw GeomError(GeomError::Kind::ThroughVertex,
                      "transversal: line passes through vertex " + std::to_string(i + 1), i);

  Transversal t{polygon, line, {}, {}};
  t.points.reserve(n);
  t.ratios.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon.vertex(i);
    const Point& b = polygon.vertex(i + 1);
    Line side = Line::through(a, b);
    if (line.parallel_to(side))
      throw GeomError(GeomError::Kind::ParallelSide,
                      std::string("transversal: line is ") +
                          (line.same_line(side) ? "coincident with" : "parallel to") +
                          " side " + std::to_string(i + 1),
                      i);
    Point m = line_line_intersection(line, side);
    t.ratios.push_back(collinear_ratio(m, a, b));
    t.points.push_back(std::move(m));
  }
  return t;
}

Rational menelaus_product(const Transversal& t) {
  Rational prod(1);
  for (const auto& r : t.ratios) prod *= r;
  return prod;
}

Rational menelaus_product(const Polygon& polygon, const Line& line) {
  return menelaus_product(transversal_points(polygon, line));
}

}  // namespace ineq
