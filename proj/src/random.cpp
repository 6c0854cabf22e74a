#include "maclane/random.hpp"

#include "maclane/residual.hpp"

namespace maclane {

FFElem random_ff_elem(const TowerPtr& tower, int level, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(tower->p() - 1));
  std::vector<std::uint32_t> c(tower->dim(level));
  for (auto& v : c) v = dist(rng);
  return FFElem(tower, level, std::move(c));
}

FFPoly random_irreducible(const TowerPtr& tower, int level, int degree, Rng& rng, bool nonzero_constant) {
  for (;;) {
    std::vector<FFElem> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_ff_elem(tower, level, rng));
    c.push_back(FFElem::one(tower, level));
    FFPoly f(tower, level, std::move(c));
    if (nonzero_constant && f.coeff(0).is_zero()) continue;
    if (ff_is_irreducible(f)) return f;
  }
}

QPoly random_poly(Rng& rng, int degree, long bound, bool monic) {
  return random_poly(rng, degree, Integer(bound), monic);
}

QPoly random_poly(Rng& rng, int degree, const Integer& bound, bool monic) {
  // gmp's own generator, seeded from ours, so big bounds stay uniform
  gmp_randclass gr(gmp_randinit_mt);
  gr.seed(static_cast<unsigned long>(rng()));
  const Integer span = 2 * bound + 1;
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(Integer(gr.get_z_range(span) - bound));
  if (monic) {
    c.emplace_back(1);
  } else {
    Integer lead;
    do lead = gr.get_z_range(span) - bound;
    while (lead == 0);
    c.emplace_back(lead);
  }
  return QPoly(std::move(c));
}

Valuation random_chain(Rng& rng, std::uint64_t p, const ChainLimits& limits) {
  Valuation mu = Valuation::mu0(p);
  std::uniform_int_distribution<int> num(1, limits.max_slope_num), den(1, limits.max_slope_den);
  for (int step = 0; step < limits.depth; ++step) {
    const int r = mu.depth();
    const long e = r == 0 ? 1 : mu.top().e;
    const long m = r == 0 ? 1 : mu.top().m;
    int maxd = limits.max_residual_degree;
    while (maxd > 0 && e * maxd * m > limits.max_key_degree) --maxd;
    // the new key must be strong for the chain to grow
    const int mind = (r > 0 && e == 1) ? 2 : 1;
    if (maxd < mind) break;
    int d = std::uniform_int_distribution<int>(mind, maxd)(rng);
    FFPoly psi = random_irreducible(mu.tower(), r, d, rng, r > 0);
    QPoly phi = construct_key_poly(mu, psi);
    mu = mu.augment(phi, Rational(make_rational(Integer(num(rng)), Integer(den(rng)))));
  }
  return mu;
}

}  // namespace maclane
