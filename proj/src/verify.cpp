#include "maclane/verify.hpp"

#include <algorithm>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/okutsu.hpp"
#include "maclane/random.hpp"
#include "maclane/residual.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

namespace {

struct Tally {
  PropertyTally t;
  void record(bool ok) { ok ? ++t.passed : ++t.failed; }
};

// Random valuation together with a random strong key polynomial for it.
std::pair<Valuation, QPoly> random_key(Rng& rng, std::uint64_t p, int max_key_degree) {
  Valuation mu = random_chain(rng, p, ChainLimits{static_cast<int>(rng() % 3), 2, max_key_degree, 3, 3});
  const int r = mu.depth();
  int d = 1 + static_cast<int>(rng() % 2);
  if (r > 0 && mu.top().e == 1 && d == 1) d = 2;
  FFPoly psi = random_irreducible(mu.tower(), r, d, rng, r > 0);
  return {mu, construct_key_poly(mu, psi)};
}

}  // namespace

std::vector<PropertyTally> run_verify(const VerifyOptions& o) {
  require_prime(o.p);
  if (o.trials < 0 || o.max_degree < 1 || o.coeff_bound < 1) throw InputError("verify needs positive scale parameters");
  Rng rng(o.seed);
  Tally mult{{"value_multiplicativity"}}, poly{{"polygon_additivity"}}, hom{{"homogeneous_multiplicativity"}},
      key{{"key_polynomial_roundtrip"}}, json{{"chain_json_roundtrip"}}, fac{{"factor_bookkeeping"}};
  const int key_deg = std::max(2, o.max_degree);
  auto rand_poly = [&](bool monic) {
    return random_poly(rng, static_cast<int>(rng() % static_cast<unsigned>(o.max_degree + 1)), o.coeff_bound, monic);
  };
  for (int t = 0; t < o.trials; ++t) {
    auto [mu, phi] = random_key(rng, o.p, key_deg);
    QPoly g = rand_poly(false), h = rand_poly(false);
    if (g.is_zero() || h.is_zero()) continue;
    mult.record(mu(g * h) == mu(g) + mu(h));
    poly.record(principal_part(newton_polygon(mu, phi, g * h)) ==
                polygon_add(principal_part(newton_polygon(mu, phi, g)), principal_part(newton_polygon(mu, phi, h))));
    hom.record(homog(mu, g * h) == homog(mu, g) * homog(mu, h));

    const int r = mu.depth();
    FFPoly psi = random_irreducible(mu.tower(), r, 1 + static_cast<int>(rng() % 3), rng, r > 0);
    QPoly k = construct_key_poly(mu, psi);
    FFPoly back = r == 0 ? residual_polynomial(mu, 0, k) : residual_polynomial(mu, k);
    key.record(is_key_poly(mu, k).key && back == psi);

    Valuation again = chain_from_json(chain_to_json(mu));
    json.record(equals(again, mu) && again(g) == mu(g));

    QPoly f = rand_poly(true);
    if (f.degree() >= 1 && squarefree_decomposition(f).size() == 1) {
      auto reps = factor(f, o.p);
      long total = 0;
      bool ok = true;
      for (const auto& rep : reps) {
        total += rep.e * rep.f;
        ok = ok && rep.e * rep.f == rep.phi.degree() && rep.certified_value > ExtRational(rep.delta0) &&
             is_key_poly(rep.muF, rep.phi).strong;
      }
      fac.record(ok && total == f.degree());
    }
  }
  return {mult.t, poly.t, hom.t, key.t, json.t, fac.t};
}

}  // namespace maclane
