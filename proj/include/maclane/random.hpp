#pragma once

#include <cstdint>
#include <random>

#include "maclane/finite_field.hpp"
#include "maclane/qpoly.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

using Rng = std::mt19937_64;

FFElem random_ff_elem(const TowerPtr& tower, int level, Rng& rng);
// Monic irreducible of the given degree; with nonzero_constant the root 0 is excluded.
FFPoly random_irreducible(const TowerPtr& tower, int level, int degree, Rng& rng, bool nonzero_constant);
// Integer coefficients in [-bound, bound]; leading coefficient nonzero (1 when monic).
QPoly random_poly(Rng& rng, int degree, long bound, bool monic = false);
// Integer coefficients of arbitrary size: |c| <= bound as an Integer.
QPoly random_poly(Rng& rng, int degree, const Integer& bound, bool monic = false);

struct ChainLimits {
  int depth = 2;
  int max_residual_degree = 2;
  int max_key_degree = 12;
  int max_slope_den = 3;
  int max_slope_num = 3;
};

// Chain of exactly limits.depth steps when the degree budget allows, else shorter.
Valuation random_chain(Rng& rng, std::uint64_t p, const ChainLimits& limits = {});

}  // namespace maclane
