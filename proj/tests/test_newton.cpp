#include <random>

#include "doctest.h"
#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/random.hpp"
#include "maclane/residual.hpp"
#include "maclane/valuation.hpp"
#include "support/oracles.hpp"

using namespace maclane;

namespace {
QPoly P(const std::string& s) { return parse_qpoly(s); }
Rational Q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }
Point pt(long s, Rational q) { return {s, std::move(q)}; }

struct Instance {
  Valuation mu;
  QPoly phi;
};

// A random valuation with a random strong key polynomial for it.
Instance random_instance(Rng& rng, std::uint64_t p, int depth) {
  Valuation mu = random_chain(rng, p, ChainLimits{depth, 2, 6, 3, 3});
  const int r = mu.depth();
  int d = 1 + static_cast<int>(rng() % 2);
  if (r > 0 && mu.top().e == 1 && d == 1) d = 2;
  FFPoly psi = random_irreducible(mu.tower(), r, d, rng, r > 0);
  return {mu, construct_key_poly(mu, psi)};
}

// Multiplicity of psi in R, by repeated division.
int ff_order(FFPoly R, const FFPoly& psi) {
  int k = 0;
  for (;;) {
    auto [q, rem] = divmod(R, psi);
    if (!rem.is_zero()) return k;
    R = q;
    ++k;
  }
}
}  // namespace

TEST_CASE("hull examples") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto n = newton_polygon(mu0(p), P("x"), P("x^2+" + std::to_string(p)));
    REQUIRE(n.vertices().size() == 2);
    CHECK(n.vertices()[0] == pt(0, Q(1)));
    CHECK(n.vertices()[1] == pt(2, Q(0)));
    CHECK(n.sides().at(0).slope() == Q(-1, 2));
  }
  auto n = newton_polygon(mu0(2), P("x+1"), P("x^4+1"));
  std::vector<Point> cloud{pt(0, Q(1)), pt(1, Q(2)), pt(2, Q(1)), pt(3, Q(2)), pt(4, Q(0))};
  CHECK(n.cloud() == cloud);
  REQUIRE(n.vertices().size() == 2);
  CHECK(n.sides().at(0).slope() == Q(-1, 4));

  auto d = principal_part(newton_polygon(mu0(2), P("x"), P("x^3-x^2-2*x-8")));
  std::vector<Point> want{pt(0, Q(3)), pt(1, Q(1)), pt(2, Q(0))};
  CHECK(d.vertices() == want);
  CHECK(d.sides().at(0).slope() == Q(-2));
  CHECK(d.sides().at(1).slope() == Q(-1));

  CHECK(newton_polygon(mu0(3), P("x"), QPoly()).empty());
  CHECK(value_from_polygon(NewtonPolygon(), Q(1)).is_infinite());
}

TEST_CASE("collinear points are not vertices but stay in the cloud") {
  auto n = NewtonPolygon::hull({pt(0, Q(2)), pt(1, Q(1)), pt(2, Q(0)), pt(1, Q(5))});
  std::vector<Point> want{pt(0, Q(2)), pt(2, Q(0))};
  CHECK(n.vertices() == want);
  CHECK(n.cloud().size() == 4);
}

TEST_CASE("principal part") {
  NewtonPolygon single({pt(3, Q(2))});
  CHECK(principal_part(single) == single);
  NewtonPolygon four({pt(0, Q(4)), pt(1, Q(2)), pt(2, Q(1)), pt(3, Q(1)), pt(4, Q(2))});
  std::vector<Point> want{pt(0, Q(4)), pt(1, Q(2)), pt(2, Q(1))};
  CHECK(principal_part(four).vertices() == want);
  NewtonPolygon rising({pt(1, Q(0)), pt(2, Q(1))});
  CHECK(principal_part(rising).vertices() == std::vector<Point>{pt(1, Q(0))});
}

TEST_CASE("lambda components") {
  NewtonPolygon n({pt(0, Q(1)), pt(2, Q(0))});
  Component whole = lambda_component(n, Q(1, 2), 1);
  CHECK(whole.s_lo == 0);
  CHECK(whole.s_hi == 2);
  CHECK(whole.u == 1);
  Component right = lambda_component(n, Q(1, 3), 1);
  CHECK(right.s_lo == 2);
  CHECK(right.s_hi == 2);
  CHECK(right.u == 0);
  Component left = lambda_component(n, Q(1), 1);
  CHECK(left.s_lo == 0);
  CHECK(left.s_hi == 0);
  NewtonPolygon frac({pt(0, Q(3, 2)), pt(1, Q(1, 2))});
  CHECK(lambda_component(frac, Q(1), 2).u == 3);
  CHECK_THROWS(lambda_component(frac, Q(1), 1));
}

TEST_CASE("polygon sums") {
  NewtonPolygon a({pt(1, Q(2))}), b({pt(3, Q(-1))});
  CHECK(polygon_add(a, b).vertices() == std::vector<Point>{pt(4, Q(1))});
  NewtonPolygon s1({pt(0, Q(2)), pt(1, Q(0))}), s2({pt(0, Q(1)), pt(1, Q(0))});
  std::vector<Point> want{pt(0, Q(3)), pt(1, Q(1)), pt(2, Q(0))};
  CHECK(polygon_add(s1, s2).vertices() == want);
  CHECK(polygon_add(s2, s1).vertices() == want);
  // equal slopes merge
  std::vector<Point> merged{pt(0, Q(2)), pt(2, Q(0))};
  CHECK(polygon_add(s2, s2).vertices() == merged);
}

TEST_CASE("value from polygon") {
  CHECK(value_from_polygon(NewtonPolygon({pt(0, Q(1)), pt(2, Q(0))}), Q(1, 2)) == ExtRational(1));
  CHECK(value_from_polygon(NewtonPolygon({pt(3, Q(2))}), Q(1)) == ExtRational(5));
}

TEST_CASE("random instances: product, affinity, values, length") {
  Rng rng(99);
  int checked = 0;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int c = 0; c < 10; ++c) {
      Instance in = random_instance(rng, p, static_cast<int>(rng() % 3));
      const Valuation& mu = in.mu;
      const QPoly& phi = in.phi;
      REQUIRE(is_key_poly(mu, phi).key);
      Rational lam = Q(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
      Valuation mup = mu.augment(phi, lam);
      const bool proper = is_key_poly(mu, phi).proper;
      for (int t = 0; t < 15; ++t) {
        QPoly g = random_poly(rng, static_cast<int>(rng() % 10), 1000000L);
        QPoly h = random_poly(rng, static_cast<int>(rng() % 10), 1000000L);
        if (rng() % 3 == 0) g *= phi;
        NewtonPolygon ng = newton_polygon(mu, phi, g), nh = newton_polygon(mu, phi, h);
        NewtonPolygon ngh = newton_polygon(mu, phi, g * h);
        CHECK(principal_part(ngh) == polygon_add(principal_part(ng), principal_part(nh)));
        // value at the slope and at zero
        CHECK(value_from_polygon(ng, lam) == mup(g));
        CHECK(value_from_polygon(ng, Q(0)) == mu(g));
        // affinity
        if (mup.depth() > mu.depth()) {
          CHECK(newton_polygon(mup, phi, g) == affine_shift(ng, lam));
        }
        // component additivity
        const long ep = mu.e_mu();
        Component cg = lambda_component(ng, lam, ep), ch = lambda_component(nh, lam, ep);
        Component cgh = lambda_component(ngh, lam, ep);
        CHECK(cgh.s_lo == cg.s_lo + ch.s_lo);
        CHECK(cgh.s_hi == cg.s_hi + ch.s_hi);
        CHECK(cgh.u == cg.u + ch.u);
        // s(g) is the order of phi for the augmented valuation
        if (mup.depth() > mu.depth()) CHECK(cg.s_lo == ord_key(mup, phi, g));
        // length of the principal part against the residual order
        long len = principal_part(ng).length();
        CHECK(len == ord_key(mu, phi, g));
        if (proper) {
          FFPoly psi = mu.depth() == 0 ? residual_polynomial(mu, 0, phi) : residual_polynomial(mu, phi);
          FFPoly Rg = residual_polynomial(mu, g);
          CHECK(ff_order(Rg, psi) == len);
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 450);
}
