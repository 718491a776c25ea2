#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Degenerate-configuration errors for the transversal machinery. `index`
/// names the offending side or vertex where applicable.
struct GeomError : std::runtime_error {
  enum class Kind {
    ParallelLines,
    CoincidentLines,
    ParallelSide,
    ThroughVertex,
    NonCollinear,
    CoincidesWithEndpoint,
    DiagonalParallel,
    DiagonalThroughCutVertex,
    DegenerateDiagonal,
  };
  GeomError(Kind k, std::string msg, std::size_t idx = 0)
      : std::runtime_error(std::move(msg)), kind(k), index(idx) {}
  Kind kind;
  std::size_t index;
};

/// Line a*x + b*y + c = 0 with (a, b) != (0, 0), stored canonically:
/// the first nonzero of (a, b) equals 1.
class Line {
 public:
  static Line from_coeffs(Rational a, Rational b, Rational c);
  static Line through(const Point& p, const Point& q);  // p != q

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool contains(const Point& p) const { return (a_ * p.x + b_ * p.y + c_).is_zero(); }
  bool parallel_to(const Line& o) const { return (a_ * o.b_ - b_ * o.a_).is_zero(); }
  bool same_line(const Line& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

  friend bool operator==(const Line& a, const Line& b) { return a.same_line(b); }

 private:
  Line(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  Rational a_, b_, c_;
};

/// Ordered vertices A_1 .. A_n, n >= 3, with cyclic side indexing
/// (side i joins A_i and A_{i+1}, side n joins A_n and A_1). Consecutive
/// vertices must be distinct; convexity and simplicity are not required.
class Polygon {
 public:
  static Polygon from_vertices(std::vector<Point> vertices);

  std::size_t size() const { return v_.size(); }
  const Point& vertex(std::size_t i) const { return v_[i % v_.size()]; }  // cyclic
  const std::vector<Point>& vertices() const { return v_; }

 private:
  explicit Polygon(std::vector<Point> v) : v_(std::move(v)) {}
  std::vector<Point> v_;
};

/// A line together with its intersections M_i against every (extended) side
/// of a polygon and the unsigned section ratios r_i = |M_i A_i| / |M_i A_{i+1}|.
struct Transversal {
  Polygon polygon;
  Line line;
  std::vector<Point> points;
  std::vector<Rational> ratios;
};

/// Exact intersection of two non-parallel lines.
Point line_line_intersection(const Line& l1, const Line& l2);

/// Unsigned ratio |MA| / |MB| for three collinear points, computed from the
/// 1-D affine parameter along the common line, so the value is rational even
/// though the two distances are generally irrational.
Rational collinear_ratio(const Point& m, const Point& a, const Point& b);

/// All n transversal points and ratios. Throws ThroughVertex(i) when the
/// line passes through a vertex and ParallelSide(i) when it is parallel to
/// (or coincides with) a side's supporting line.
Transversal transversal_points(const Polygon& polygon, const Line& line);

Rational menelaus_product(const Transversal& t);
Rational menelaus_product(const Polygon& polygon, const Line& line);

}  // namespace ineq
