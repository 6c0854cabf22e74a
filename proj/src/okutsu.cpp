#include "maclane/okutsu.hpp"

#include <json.hpp>

#include <atomic>
#include <thread>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/residual.hpp"

namespace maclane {

namespace {

constexpr int kMaxBranchDepth = 200;

// v(phi(theta)) for the unique factor of g with phi |_mu F, read off the one-sided polygon.
ExtRational certify(const Valuation& mu, const QPoly& phi, const QPoly& g) {
  if ((g % phi).is_zero()) return ExtRational::infinity();
  NewtonPolygon n = principal_part(newton_polygon(mu, phi, g));
  if (n.vertices().size() != 2 || n.length() != 1)
    throw MathError("approximation of " + to_string(phi) + " does not isolate one factor; input may be inseparable");
  return mu(phi) + ExtRational(Rational(-n.sides().front().slope()));
}

FactorReport make_report(const Valuation& mu, const QPoly& phi, const FFPoly& psi, const ExtRational& cert,
                         const QPoly& source) {
  const int r = mu.depth();
  const bool strong = r == 0 || phi.degree() > mu.top().m;
  Valuation muF = strong ? mu : mu.truncate(r - 1);
  FFPoly psiF = strong ? psi : residual_polynomial(muF, phi).monic();
  const int rF = muF.depth();
  long f = psiF.degree();
  for (int i = 0; i < rF; ++i) f *= muF.level(i).f;
  Rational d0(0);
  if (rF > 0) d0 = muF.top().e * psiF.degree() * muF.phi_value(rF);
  FactorReport rep{phi, muF, psiF, muF.e_mu(), f, rF, d0, cert, mu, source};
  if (rep.e * rep.f != phi.degree()) throw MathError("degree bookkeeping failed for " + to_string(phi));
  return rep;
}

struct Driver {
  std::uint64_t p;
  const QPoly& source;
  std::vector<FactorReport> out;

  void emit(const Valuation& mu, const FFPoly& psi, const QPoly& g) {
    QPoly phi = construct_key_poly(mu, psi);
    out.push_back(make_report(mu, phi, psi, certify(mu, phi, g), source));
  }

  // Splits by the residual factors of g under mu.
  void split(const Valuation& mu, QPoly g, const FFPoly& R, int level) {
    for (const auto& [psi, t] : ff_factor(R)) {
      if (t == 1) {
        emit(mu, psi, g);
      } else {
        branch(mu, construct_key_poly(mu, psi), psi, g, level + 1);
      }
    }
  }

  void branch(const Valuation& mu, const QPoly& phi, const FFPoly& psi, QPoly g, int level) {
    if (level > kMaxBranchDepth) throw MathError("factorization did not terminate; input may be inseparable");
    for (;;) {
      auto [q, rem] = divmod(g, phi);
      if (!rem.is_zero()) break;
      out.push_back(make_report(mu, phi, psi, ExtRational::infinity(), source));
      g = q;
    }
    if (g.degree() < phi.degree()) return;
    NewtonPolygon n = principal_part(newton_polygon(mu, phi, g));
    long accounted = 0;
    for (const auto& side : n.sides()) {
      Rational lam = -side.slope();
      Valuation ml = mu.augment(phi, lam);
      FFPoly R = residual_polynomial(ml, g);
      // deg g_{lambda,L} summed over L equals the side length times deg phi
      const long e_lam = make_rational(lam.get_num() * mu.e_mu(), lam.get_den()).get_den().get_si();
      if (e_lam * R.degree() != side.length()) throw MathError("residual degree does not match the side length");
      accounted += side.length();
      split(ml, g, R, level);
    }
    if (accounted != n.length()) throw MathError("polygon sides do not cover the principal part");
  }
};

std::vector<FactorReport> factor_squarefree(const QPoly& g, std::uint64_t p, int jobs) {
  Valuation m0 = mu0(p);
  FFPoly R = residual_polynomial(m0, 0, g);
  auto top = ff_factor(R);
  std::vector<std::vector<FactorReport>> parts(top.size());
  auto run = [&](std::size_t i) {
    Driver d{p, g, {}};
    const auto& [psi, t] = top[i];
    if (t == 1) {
      d.emit(m0, psi, g);
    } else {
      d.branch(m0, construct_key_poly(m0, psi), psi, g, 1);
    }
    parts[i] = std::move(d.out);
  };
  if (jobs <= 1 || top.size() <= 1) {
    for (std::size_t i = 0; i < top.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(top.size());
    std::vector<std::thread> pool;
    const auto n = std::min<std::size_t>(static_cast<std::size_t>(jobs), top.size());
    for (std::size_t w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < top.size();) {
          try {
            run(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<FactorReport> out;
  for (auto& v : parts)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

nlohmann::ordered_json report_json(const FactorReport& r) {
  nlohmann::ordered_json j;
  j["phi"] = to_string(r.phi);
  j["e"] = r.e;
  j["f"] = r.f;
  j["depth"] = r.depth;
  j["delta0"] = to_string(r.delta0);
  auto frame = nlohmann::ordered_json::array();
  auto lambdas = nlohmann::ordered_json::array();
  for (int i = 1; i <= r.muF.depth(); ++i) {
    frame.push_back(to_string(r.muF.phi(i)));
    lambdas.push_back(to_string(r.muF.lambda(i)));
  }
  j["frame"] = frame;
  j["lambda"] = lambdas;
  j["psi"] = r.psi.str();
  j["certified_value"] = r.certified_value.str();
  return j;
}

}  // namespace

std::vector<FactorReport> factor(const QPoly& g, std::uint64_t p, const FactorOptions& opts) {
  require_prime(p);
  if (g.is_zero() || !g.is_monic() || !g.is_integral())
    throw InputError("factor needs a monic polynomial with integer coefficients");
  std::vector<FactorReport> out;
  if (g.degree() < 1) return out;
  for (const auto& [part, mult] : squarefree_decomposition(g)) {
    if (part.degree() < 1) continue;
    for (auto& rep : factor_squarefree(part, p, opts.jobs)) {
      if (opts.target_precision > 0) rep = refine_to(std::move(rep), opts.target_precision);
      for (int k = 0; k < mult; ++k) out.push_back(rep);
    }
  }
  return out;
}

FactorReport refine(const FactorReport& rep) {
  if (rep.exact()) throw AlreadyExact(to_string(rep.phi) + " already divides the input");
  const QPoly& g = rep.source;
  NewtonPolygon n = principal_part(newton_polygon(rep.mu, rep.phi, g));
  if (n.vertices().size() != 2 || n.length() != 1) throw MathError("report state is not one-sided");
  Rational lam = -n.sides().front().slope();
  Valuation next = rep.mu.augment(rep.phi, lam);
  FFPoly R = residual_polynomial(next, g);
  if (R.degree() != 1) throw MathError("refinement residual is not linear");
  QPoly phi = construct_key_poly(next, R.monic());
  ExtRational cert = certify(next, phi, g);
  if (cert <= rep.certified_value) throw MathError("refinement did not increase the certified value");
  FactorReport out = rep;
  out.phi = phi;
  out.mu = next;
  out.certified_value = cert;
  return out;
}

FactorReport refine_to(FactorReport rep, const Rational& target) {
  while (!rep.exact() && rep.certified_value < ExtRational(target)) rep = refine(rep);
  return rep;
}

ExtRational value_at_root(const FactorReport& rep, const QPoly& h, int max_refinements) {
  if (h.is_zero()) return ExtRational::infinity();
  if (rep.exact()) {
    QPoly r = h % rep.phi;
    return r.is_zero() ? ExtRational::infinity() : rep.mu(r);
  }
  // F | h exactly when some rational common factor of h and the source carries F
  QPoly d = gcd(h, rep.source);
  if (d.degree() >= 1 && ord_key_unchecked(rep.mu, rep.phi, d) > 0) return ExtRational::infinity();
  FactorReport cur = rep;
  for (int it = 0;; ++it) {
    if (ord_key_unchecked(cur.mu, cur.phi, h) == 0) return cur.mu(h);
    if (it >= max_refinements) throw MathError("value at root did not stabilize within the refinement bound");
    cur = refine(cur);
    if (cur.exact()) {
      QPoly r = h % cur.phi;
      return r.is_zero() ? ExtRational::infinity() : cur.mu(r);
    }
  }
}

OkutsuFrame okutsu_frame(const FactorReport& rep) {
  OkutsuFrame fr;
  for (int i = 1; i <= rep.muF.depth(); ++i) {
    fr.phis.push_back(rep.muF.phi(i));
    fr.Cs.push_back(rep.muF.level(i).C);
  }
  return fr;
}

bool okutsu_equiv(const FactorReport& a, const FactorReport& b) {
  if (a.muF.p() != b.muF.p()) throw MathError("reports over different primes");
  if (a.phi.degree() != b.phi.degree()) return false;
  if (!equals(a.muF, b.muF)) return false;
  // compare residual ideals under one common chain
  return residual_ideal(a.muF, a.phi) == residual_ideal(a.muF, b.phi);
}

Rational delta0(const FactorReport& rep) { return rep.delta0; }

IntervalDescription interval_decomposition(const FactorReport& rep) {
  IntervalDescription d;
  for (int i = 1; i <= rep.muF.depth(); ++i) d.segments.push_back({rep.muF.phi(i), Rational(0), rep.muF.lambda(i)});
  d.segments.push_back({rep.phi, Rational(0), ExtRational::infinity()});
  return d;
}

std::string factor_json(std::uint64_t p, const QPoly& g, const std::vector<FactorReport>& reports) {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["poly"] = to_string(g);
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["factors"].push_back(report_json(r));
  return j.dump();
}

}  // namespace maclane
