#pragma once

#include <vector>

#include "maclane/qpoly.hpp"
#include "maclane/rational.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

struct Point {
  long s = 0;
  Rational q;
  friend bool operator==(const Point& a, const Point& b) { return a.s == b.s && a.q == b.q; }
};

struct Side {
  Point left, right;
  Rational slope() const { return Rational((right.q - left.q) / (right.s - left.s)); }
  long length() const { return right.s - left.s; }
};

// Lower convex hull; vertices strictly increasing in s with strictly increasing slopes.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<Point> vertices, std::vector<Point> cloud = {});
  static NewtonPolygon hull(std::vector<Point> cloud);

  bool empty() const { return vertices_.empty(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  // Defining points, including those strictly above the hull or interior to a side.
  const std::vector<Point>& cloud() const { return cloud_; }
  std::vector<Side> sides() const;
  long length() const { return empty() ? 0 : vertices_.back().s; }
  long left_abscissa() const { return empty() ? 0 : vertices_.front().s; }
  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point> vertices_;
  std::vector<Point> cloud_;
};

struct Component {
  long s_lo = 0;
  long s_hi = 0;
  Integer u{0};
};

// Polygon of g with respect to mu and a key polynomial phi: points (s, mu(a_s phi^s)).
NewtonPolygon newton_polygon(const Valuation& mu, const QPoly& phi, const QPoly& g);
// N_i(g): the polygon with respect to mu_{i-1} and phi_i, 1 <= i <= depth.
NewtonPolygon newton_polygon_level(const Valuation& mu, int level, const QPoly& g);

NewtonPolygon principal_part(const NewtonPolygon& n);
Component lambda_component(const NewtonPolygon& n, const Rational& lambda, long e_prev);
NewtonPolygon polygon_add(const NewtonPolygon& a, const NewtonPolygon& b);
ExtRational value_from_polygon(const NewtonPolygon& n, const Rational& lambda);
// (x, y) -> (x, y + lambda x)
NewtonPolygon affine_shift(const NewtonPolygon& n, const Rational& lambda);

}  // namespace maclane
