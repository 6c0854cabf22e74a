#include "maclane/newton.hpp"

#include <algorithm>
#include <functional>

#include "maclane/errors.hpp"

namespace maclane {

namespace {

// cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below segment ac
Rational cross(const Point& a, const Point& b, const Point& c) {
  return Rational((b.s - a.s) * (c.q - a.q) - (b.q - a.q) * (c.s - a.s));
}

NewtonPolygon cloud_polygon(const std::vector<QPoly>& expansion, const Rational& step,
                            const std::function<ExtRational(const QPoly&)>& val) {
  std::vector<Point> cloud;
  for (std::size_t s = 0; s < expansion.size(); ++s) {
    if (expansion[s].is_zero()) continue;
    ExtRational v = val(expansion[s]);
    cloud.push_back({static_cast<long>(s), Rational(v.value() + step * static_cast<long>(s))});
  }
  return NewtonPolygon::hull(std::move(cloud));
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<Point> vertices, std::vector<Point> cloud)
    : vertices_(std::move(vertices)), cloud_(std::move(cloud)) {
  if (cloud_.empty()) cloud_ = vertices_;
}

NewtonPolygon NewtonPolygon::hull(std::vector<Point> cloud) {
  std::sort(cloud.begin(), cloud.end(), [](const Point& a, const Point& b) {
    return a.s != b.s ? a.s < b.s : a.q < b.q;
  });
  std::vector<Point> lower;
  for (const auto& pt : cloud) {
    if (!lower.empty() && lower.back().s == pt.s) continue;  // keep the lowest point per abscissa
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), pt) <= 0) lower.pop_back();
    lower.push_back(pt);
  }
  NewtonPolygon n;
  n.vertices_ = std::move(lower);
  n.cloud_ = std::move(cloud);
  return n;
}

std::vector<Side> NewtonPolygon::sides() const {
  std::vector<Side> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) out.push_back({vertices_[i - 1], vertices_[i]});
  return out;
}

NewtonPolygon newton_polygon(const Valuation& mu, const QPoly& phi, const QPoly& g) {
  if (g.is_zero()) return {};
  ExtRational vphi = mu(phi);
  return cloud_polygon(phi_expansion(g, phi), vphi.value(), [&](const QPoly& a) { return mu(a); });
}

NewtonPolygon newton_polygon_level(const Valuation& mu, int level, const QPoly& g) {
  if (level < 1 || level > mu.depth()) throw MathError("polygon level out of range");
  if (g.is_zero()) return {};
  return cloud_polygon(phi_expansion(g, mu.phi(level)), mu.level(level).w,
                       [&](const QPoly& a) { return mu.value_at(level - 1, a); });
}

NewtonPolygon principal_part(const NewtonPolygon& n) {
  if (n.empty()) return n;
  std::vector<Point> v{n.vertices().front()};
  for (const auto& side : n.sides()) {
    if (side.slope() >= 0) break;
    v.push_back(side.right);
  }
  std::vector<Point> cloud;
  for (const auto& pt : n.cloud())
    if (pt.s <= v.back().s) cloud.push_back(pt);
  return NewtonPolygon(std::move(v), std::move(cloud));
}

Component lambda_component(const NewtonPolygon& n, const Rational& lambda, long e_prev) {
  if (n.empty()) throw MathError("component of an empty polygon");
  const auto& v = n.vertices();
  Rational best;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational y = v[i].q + lambda * v[i].s;
    if (i == 0 || y < best) {
      best = y;
      lo = hi = i;
    } else if (y == best) {
      hi = i;
    }
  }
  Rational u = v[lo].q * e_prev;
  if (u.get_den() != 1) throw MathError("component ordinate outside the value group");
  return {v[lo].s, v[hi].s, u.get_num()};
}

NewtonPolygon polygon_add(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.empty() || b.empty()) return {};
  auto sa = a.sides(), sb = b.sides();
  std::vector<Side> all;
  all.insert(all.end(), sa.begin(), sa.end());
  all.insert(all.end(), sb.begin(), sb.end());
  std::stable_sort(all.begin(), all.end(), [](const Side& x, const Side& y) { return x.slope() < y.slope(); });
  Point cur{a.vertices().front().s + b.vertices().front().s,
            Rational(a.vertices().front().q + b.vertices().front().q)};
  std::vector<Point> v{cur};
  for (const auto& sd : all) {
    Point nxt{cur.s + sd.length(), Rational(cur.q + sd.slope() * sd.length())};
    // equal slopes merge into one side
    if (v.size() >= 2) {
      Side last{v[v.size() - 2], v.back()};
      if (last.slope() == sd.slope()) v.pop_back();
    }
    v.push_back(nxt);
    cur = nxt;
  }
  return NewtonPolygon(std::move(v));
}

ExtRational value_from_polygon(const NewtonPolygon& n, const Rational& lambda) {
  if (n.empty()) return ExtRational::infinity();
  ExtRational best = ExtRational::infinity();
  for (const auto& pt : n.vertices()) best = min(best, ExtRational(Rational(pt.q + lambda * pt.s)));
  return best;
}

NewtonPolygon affine_shift(const NewtonPolygon& n, const Rational& lambda) {
  std::vector<Point> v, c;
  for (const auto& pt : n.vertices()) v.push_back({pt.s, Rational(pt.q + lambda * pt.s)});
  for (const auto& pt : n.cloud()) c.push_back({pt.s, Rational(pt.q + lambda * pt.s)});
  return NewtonPolygon(std::move(v), std::move(c));
}

}  // namespace maclane
