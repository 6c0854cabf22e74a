#include "maclane/valuation.hpp"

#include <json.hpp>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/residual.hpp"

namespace maclane {

Valuation Valuation::mu0(std::uint64_t p) {
  require_prime(p);
  Valuation v;
  v.p_ = p;
  v.levels_.emplace_back();
  v.tower_ = FFTower::prime_field(p);
  return v;
}

Valuation Valuation::from_chain(std::uint64_t p, const std::vector<ChainStep>& steps) {
  Valuation v = mu0(p);
  for (const auto& st : steps) v = v.augment(st.phi, st.lambda);
  return v;
}

const QPoly& Valuation::phi(int i) const {
  if (i < 1 || i > depth()) throw MathError("no key polynomial at level " + std::to_string(i));
  return steps_[static_cast<std::size_t>(i - 1)].phi;
}

const Rational& Valuation::lambda(int i) const {
  if (i < 1 || i > depth()) throw MathError("no slope at level " + std::to_string(i));
  return steps_[static_cast<std::size_t>(i - 1)].lambda;
}

Rational Valuation::phi_value(int i) const {
  const auto& L = level(i);
  return Rational(L.w + L.lambda);
}

Valuation Valuation::truncate(int d) const {
  if (d < 0 || d > depth()) throw MathError("bad truncation depth");
  if (d == depth()) return *this;
  Valuation v;
  v.p_ = p_;
  v.steps_.assign(steps_.begin(), steps_.begin() + d);
  v.levels_.assign(levels_.begin(), levels_.begin() + d + 1);
  v.levels_.back().f = 0;
  v.tower_ = tower_->prefix(d);
  return v;
}

ExtRational Valuation::value_at(int lvl, const QPoly& g) const {
  if (g.is_zero()) return ExtRational::infinity();
  if (lvl == 0) {
    ExtRational best = ExtRational::infinity();
    for (const auto& c : g.coeffs())
      if (c != 0) best = min(best, vp(c, p_));
    return best;
  }
  const QPoly& ph = phi(lvl);
  if (g.degree() < ph.degree()) return value_at(lvl - 1, g);
  const Rational slope = phi_value(lvl);
  auto exp = phi_expansion(g, ph);
  ExtRational best = ExtRational::infinity();
  for (std::size_t s = 0; s < exp.size(); ++s) {
    if (exp[s].is_zero()) continue;
    best = min(best, value_at(lvl - 1, exp[s]) + ExtRational(Rational(slope * static_cast<long>(s))));
  }
  return best;
}

Valuation Valuation::augment(const QPoly& ph, const Rational& lam) const {
  if (lam <= 0) throw MathError("augmentation slope must be positive, got " + to_string(lam));
  if (!ph.is_monic() || ph.degree() < 1) throw KeyPolyError("key polynomial must be monic of positive degree: " + to_string(ph));
  if (!ph.is_integral()) throw KeyPolyError("key polynomial must have integer coefficients: " + to_string(ph));
  KeyPolyStatus st = is_key_poly(*this, ph);
  if (!st.key) throw KeyPolyError(to_string(ph) + " is not a key polynomial for the current valuation");
  const int r = depth();
  if (r >= 1 && ph.degree() == top().m) {
    // same degree as phi_r: merge with the last step
    return truncate(r - 1).augment(ph, Rational(lambda(r) + lam));
  }
  FFPoly psi = residual_polynomial(*this, r, ph);
  if (!psi.is_monic()) throw MathError("residual polynomial of a key polynomial is not monic");
  Valuation v = *this;
  v.tower_ = tower_->extend(psi);
  v.levels_.back().f = psi.degree();
  v.steps_.push_back({ph, lam});

  LevelInvariants L;
  L.lambda = lam;
  L.m = ph.degree();
  ExtRational w = value_at(r, ph);
  L.w = w.value();
  const long e_prev = top().e_mu;
  Rational V = L.w * e_prev;
  if (V.get_den() != 1) throw MathError("value of key polynomial outside the value group");
  L.V = V.get_num();
  Rational q = lam * e_prev;
  L.h = q.get_num();
  L.e = q.get_den().get_si();
  L.C = Rational((L.w + lam) / L.m);
  if (L.e == 1) {
    L.ell = 0;
  } else {
    Integer inv, e(L.e);
    Integer hm = mod_floor(L.h, e);
    mpz_invert(inv.get_mpz_t(), hm.get_mpz_t(), e.get_mpz_t());
    L.ell = inv;
  }
  L.ell_prime = (1 - L.ell * L.h) / L.e;
  L.e_mu = e_prev * L.e;
  v.levels_.push_back(L);
  return v;
}

std::vector<QPoly> phi_expansion(const QPoly& g, const QPoly& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) throw MathError("expansion requires a monic non-constant polynomial");
  std::vector<QPoly> out;
  QPoly rest = g;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, phi);
    out.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

QPoly reassemble(const std::vector<QPoly>& expansion, const QPoly& phi) {
  QPoly acc;
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) acc = acc * phi + *it;
  return acc;
}

Invariants invariants(const Valuation& mu) {
  Invariants inv;
  for (int i = 0; i <= mu.depth(); ++i) inv.levels.push_back(mu.level(i));
  inv.e_mu = mu.e_mu();
  inv.gamma_generator = make_rational(Integer(1), Integer(mu.e_mu()));
  return inv;
}

Valuation optimize_chain(const Valuation& mu) { return mu; }

Valuation optimize_chain(std::uint64_t p, const std::vector<ChainStep>& steps) {
  return Valuation::from_chain(p, steps);
}

bool equals(const Valuation& mu, const Valuation& nu) {
  if (mu.p() != nu.p()) throw MathError("comparing valuations over different primes");
  if (mu.depth() != nu.depth()) return false;
  for (int i = 1; i <= mu.depth(); ++i) {
    if (mu.phi(i).degree() != nu.phi(i).degree()) return false;
    if (mu.lambda(i) != nu.lambda(i)) return false;
    if (!(mu.value_at(i, nu.phi(i)) == ExtRational(mu.phi_value(i)))) return false;
  }
  return true;
}

bool mu_equivalent(const Valuation& mu, const QPoly& g, const QPoly& h) {
  return mu(g - h) > mu(g);
}

bool is_minimal(const Valuation& mu, const QPoly& g) {
  if (g.degree() < 1) return false;
  if (mu.depth() == 0) return mu(g) == vp(g.leading(), mu.p());
  const int r = mu.depth();
  NewtonPolygon n = newton_polygon_level(mu, r, g);
  Component c = lambda_component(n, mu.lambda(r), mu.level(r - 1).e_mu);
  return g.degree() == c.s_hi * mu.top().m;
}

RationalFunctions rational_functions(const Valuation& mu) {
  const int r = mu.depth();
  const auto n = static_cast<std::size_t>(r + 1);
  RationalFunctions rf;
  rf.pi.assign(n + 1, ExponentVector(n, Integer(0)));
  rf.Phi.assign(n, ExponentVector(n, Integer(0)));
  rf.gamma.assign(n, ExponentVector(n, Integer(0)));
  rf.pi[1][0] = 1;
  for (int i = 1; i <= r; ++i) {
    const auto& L = mu.level(i);
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < n; ++k) {
      rf.Phi[ui][k] = -L.V * rf.pi[ui][k];
    }
    rf.Phi[ui][ui] += 1;
    for (std::size_t k = 0; k < n; ++k) {
      rf.gamma[ui][k] = L.e * rf.Phi[ui][k] - L.h * rf.pi[ui][k];
      rf.pi[ui + 1][k] = L.ell * rf.Phi[ui][k] + L.ell_prime * rf.pi[ui][k];
    }
  }
  return rf;
}

Rational exponent_value(const Valuation& mu, int lvl, const ExponentVector& n) {
  Rational v(n.at(0));
  for (std::size_t j = 1; j < n.size(); ++j) {
    if (n[j] == 0) continue;
    ExtRational vj = mu.value_at(lvl, mu.phi(static_cast<int>(j)));
    v += Rational(n[j]) * vj.value();
  }
  return v;
}

std::string chain_to_json(const Valuation& mu) {
  nlohmann::ordered_json j;
  j["p"] = mu.p();
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& st : mu.steps()) {
    nlohmann::ordered_json s;
    s["phi"] = to_string(st.phi);
    s["lambda"] = to_string(st.lambda);
    j["steps"].push_back(s);
  }
  return j.dump();
}

Valuation chain_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad chain file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j["p"].is_number_unsigned())
    throw InputError("chain file needs an unsigned integer field \"p\"");
  auto p = j["p"].get<std::uint64_t>();
  std::vector<ChainStep> steps;
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw InputError("\"steps\" must be an array");
    for (const auto& s : j["steps"]) {
      if (!s.is_object() || !s.contains("phi") || !s.contains("lambda") || !s["phi"].is_string() || !s["lambda"].is_string())
        throw InputError("each step needs string fields \"phi\" and \"lambda\"");
      steps.push_back({parse_qpoly(s["phi"].get<std::string>()), parse_rational(s["lambda"].get<std::string>())});
    }
  }
  return Valuation::from_chain(p, steps);
}

}  // namespace maclane
