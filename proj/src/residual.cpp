#include "maclane/residual.hpp"

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"

namespace maclane {

namespace {

FFElem reduce_mod_p(const TowerPtr& t, const Rational& c) {
  const Integer p(static_cast<unsigned long>(t->p()));
  Integer num = mod_floor(c.get_num(), p), den = mod_floor(c.get_den(), p), inv;
  if (den == 0) throw MathError("reduction of a non-integral rational");
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return FFElem::from_integer(t, 0, mod_floor(num * inv, p));
}

void check_level(const Valuation& mu, int level) {
  if (level < 0 || level > mu.depth()) throw MathError("level " + std::to_string(level) + " outside the chain");
}

}  // namespace

SU s_u_of_alpha(const Valuation& mu, int level, const Rational& alpha) {
  check_level(mu, level);
  const auto& L = mu.level(level);
  Rational n = alpha * L.e_mu;
  if (n.get_den() != 1) throw MathError(to_string(alpha) + " is not in the value group at level " + std::to_string(level));
  const Integer N = n.get_num();
  const Integer e(L.e);
  Integer s = mod_floor(N * L.ell, e);
  Integer u = (N - s * L.h) / e;
  return {s.get_si(), u};
}

FFElem epsilon(const Valuation& mu, int level, const Rational& alpha) {
  if (level < 0 || level >= mu.depth()) throw MathError("epsilon needs 0 <= level < depth");
  const auto& t = mu.tower();
  if (level == 0) return FFElem::one(t, 1);
  SU su = s_u_of_alpha(mu, level, alpha);
  const auto& L = mu.level(level);
  Integer k = L.ell_prime * su.s - L.ell * su.u;
  FFElem z = t->z(level);
  if (z.is_zero()) throw MathError("z vanishes above level 0");
  return z.pow(k);
}

FFPoly R_alpha(const Valuation& mu, int level, const Rational& alpha, const QPoly& g) {
  check_level(mu, level);
  const auto& t = mu.tower();
  if (g.is_zero()) return FFPoly(t, level);
  ExtRational v = mu.value_at(level, g);
  if (v < ExtRational(alpha))
    throw MathError("residual polynomial requested at " + to_string(alpha) + " above the value " + v.str());
  if (level == 0) {
    if (alpha.get_den() != 1) throw MathError("level 0 residual needs an integer value");
    Rational scale = p_power(mu.p(), -alpha.get_num().get_si());
    std::vector<FFElem> c;
    for (const auto& a : g.coeffs()) c.push_back(reduce_mod_p(t, Rational(a * scale)));
    return FFPoly(t, 0, std::move(c));
  }
  const auto& L = mu.level(level);
  const Rational step = mu.phi_value(level);
  auto exp = phi_expansion(g, mu.phi(level));
  SU su = s_u_of_alpha(mu, level, alpha);
  FFElem z = t->z(level - 1);
  std::vector<FFElem> coeffs;
  for (long j = 0;; ++j) {
    const long sj = su.s + j * L.e;
    if (sj >= static_cast<long>(exp.size())) break;
    const QPoly& a = exp[static_cast<std::size_t>(sj)];
    Rational aj = alpha - step * sj;
    if (a.is_zero() || mu.value_at(level - 1, a) > ExtRational(aj)) {
      coeffs.push_back(FFElem::zero(t, level));
      continue;
    }
    FFElem c = epsilon(mu, level - 1, aj) * R_alpha(mu, level - 1, aj, a).eval(z);
    coeffs.push_back(c.embed(level));
  }
  return FFPoly(t, level, std::move(coeffs));
}

FFPoly residual_polynomial(const Valuation& mu, int level, const QPoly& g) {
  check_level(mu, level);
  if (g.is_zero()) return FFPoly(mu.tower(), level);
  ExtRational v = mu.value_at(level, g);
  FFPoly R = R_alpha(mu, level, v.value(), g);
  if (level == 0) return R;
  return R.unshift(R.ord_y());
}

Rational HomogElem::degree(const Valuation& mu) const {
  const int r = mu.depth();
  if (r == 0) return Rational(u);
  return Rational(make_rational(u, Integer(mu.level(r - 1).e_mu)) + mu.lambda(r) * s);
}

HomogElem operator*(const HomogElem& a, const HomogElem& b) {
  return {a.s + b.s, Integer(a.u + b.u), a.R * b.R};
}

HomogElem homog(const Valuation& mu, const QPoly& g) {
  if (g.is_zero()) throw MathError("homogeneous part of zero");
  const int r = mu.depth();
  if (r == 0) {
    ExtRational v = mu(g);
    return {0, v.value().get_num(), residual_polynomial(mu, 0, g)};
  }
  NewtonPolygon n = newton_polygon_level(mu, r, g);
  Component c = lambda_component(n, mu.lambda(r), mu.level(r - 1).e_mu);
  return {c.s_lo, c.u, residual_polynomial(mu, r, g)};
}

ResidualIdeal residual_ideal(const Valuation& mu, const QPoly& g) {
  if (g.is_zero()) throw MathError("residual ideal of zero");
  const int r = mu.depth();
  FFPoly R = residual_polynomial(mu, r, g);
  if (r == 0) {
    int k = R.ord_y();
    return {k, R.unshift(k).monic()};
  }
  NewtonPolygon n = newton_polygon_level(mu, r, g);
  Component c = lambda_component(n, mu.lambda(r), mu.level(r - 1).e_mu);
  const long e = mu.top().e;
  return {(c.s_lo + e - 1) / e, R.monic()};
}

KeyPolyStatus is_key_poly(const Valuation& mu, const QPoly& phi) {
  KeyPolyStatus st;
  if (phi.degree() < 1 || !phi.is_monic()) return st;
  const int r = mu.depth();
  const long deg = phi.degree();
  if (r == 0) {
    if (!phi.is_integral()) return st;
    st.key = ff_is_irreducible(residual_polynomial(mu, 0, phi));
    st.proper = st.strong = st.key;
    return st;
  }
  const auto& T = mu.top();
  st.proper = deg % (T.e * T.m) == 0;
  st.strong = deg > T.m;
  if (deg == T.m && mu(phi - mu.phi(r)) > mu(mu.phi(r))) {
    st.key = true;
    return st;
  }
  NewtonPolygon n = newton_polygon_level(mu, r, phi);
  Component c = lambda_component(n, mu.lambda(r), mu.level(r - 1).e_mu);
  if (c.s_lo != 0 || deg != c.s_hi * T.m) return {};
  FFPoly R = residual_polynomial(mu, r, phi);
  if (R.degree() < 1 || !ff_is_irreducible(R)) return {};
  st.key = true;
  return st;
}

long ord_key_unchecked(const Valuation& mu, const QPoly& phi, const QPoly& g) {
  if (g.is_zero()) throw MathError("order of zero");
  return principal_part(newton_polygon(mu, phi, g)).length();
}

long ord_key(const Valuation& mu, const QPoly& phi, const QPoly& g) {
  if (!is_key_poly(mu, phi).key) throw KeyPolyError(to_string(phi) + " is not a key polynomial");
  return ord_key_unchecked(mu, phi, g);
}

QPoly residual_lift(const Valuation& mu, int level, const Rational& beta, const FFPoly& P) {
  check_level(mu, level);
  if (P.is_zero()) return {};
  if (P.level() > level) throw MathError("residual polynomial above the requested level");
  const auto& t = mu.tower();
  if (level == 0) {
    if (beta.get_den() != 1) throw MathError("level 0 lift needs an integer value");
    std::vector<Rational> c;
    for (const auto& a : P.coeffs()) c.emplace_back(static_cast<unsigned long>(a.flat()[0]));
    return QPoly(std::move(c)) * QPoly::constant(p_power(mu.p(), beta.get_num().get_si()));
  }
  const auto& L = mu.level(level);
  const Rational step = mu.phi_value(level);
  const QPoly& ph = mu.phi(level);
  SU su = s_u_of_alpha(mu, level, beta);
  QPoly acc;
  for (int k = 0; k <= P.degree(); ++k) {
    FFElem pk = P.coeff(k);
    if (pk.is_zero()) continue;
    const long sk = su.s + k * L.e;
    Rational bk = beta - step * sk;
    FFElem target = pk.embed(level) / epsilon(mu, level - 1, bk);
    FFPoly Q(t, level - 1, target.coords());
    acc = acc + residual_lift(mu, level - 1, bk, Q) * ph.pow(static_cast<unsigned>(sk));
  }
  return acc;
}

QPoly construct_key_poly(const Valuation& mu, const FFPoly& psi_in) {
  const int r = mu.depth();
  if (psi_in.is_zero() || !psi_in.is_monic()) throw MathError("residual generator must be monic");
  if (psi_in.level() > r) throw MathError("residual generator lives above the top level");
  FFPoly psi = psi_in.embed(r);
  if (!ff_is_irreducible(psi)) throw MathError("residual generator " + psi.str() + " is reducible");
  if (r > 0 && psi.coeff(0).is_zero()) throw MathError("residual generator must not vanish at 0");
  Rational alpha(0);
  if (r > 0) alpha = Rational(mu.top().e * psi.degree() * mu.phi_value(r));
  QPoly phi = residual_lift(mu, r, alpha, psi);
  if (!phi.is_monic() || !phi.is_integral())
    throw MathError("constructed key polynomial is not monic integral: " + to_string(phi));
  return phi;
}

}  // namespace maclane
