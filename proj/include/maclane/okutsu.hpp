#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maclane/finite_field.hpp"
#include "maclane/qpoly.hpp"
#include "maclane/rational.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

// One p-adic irreducible factor F of the input, described by an approximation phi and by
// the pair (mu_F, R_{mu_F}(F)).
struct FactorReport {
  QPoly phi;                    // monic, integral, Okutsu equivalent to F
  Valuation muF;
  FFPoly psi;                   // generator of the residual ideal of F under muF
  long e = 1;
  long f = 1;
  int depth = 0;
  Rational delta0{0};
  ExtRational certified_value;  // lower bound for v(phi(theta)); infinite when phi = F

  // Refinement state: phi is a key polynomial for mu with phi |_mu F.
  Valuation mu;
  QPoly source;                 // squarefree polynomial F divides

  bool exact() const { return certified_value.is_infinite(); }
};

struct FactorOptions {
  Rational target_precision{0};
  int jobs = 1;
};

// One report per p-adic irreducible factor of g, repeated by multiplicity for non-squarefree g.
std::vector<FactorReport> factor(const QPoly& g, std::uint64_t p, const FactorOptions& opts = {});

// Next approximation, with strictly larger certified value. Throws AlreadyExact on exact reports.
FactorReport refine(const FactorReport& report);
FactorReport refine_to(FactorReport report, const Rational& target);

// v(h(theta)) for a root theta of the factor.
ExtRational value_at_root(const FactorReport& report, const QPoly& h, int max_refinements = 10000);

struct OkutsuFrame {
  std::vector<QPoly> phis;
  std::vector<Rational> Cs;
};
OkutsuFrame okutsu_frame(const FactorReport& report);

bool okutsu_equiv(const FactorReport& a, const FactorReport& b);
Rational delta0(const FactorReport& report);

struct IntervalSegment {
  QPoly phi;
  Rational lambda_lo{0};
  ExtRational lambda_hi;
};
struct IntervalDescription {
  std::vector<IntervalSegment> segments;
};
IntervalDescription interval_decomposition(const FactorReport& report);

// {"p":..,"poly":..,"factors":[..]} with rationals as strings and a fixed field order.
std::string factor_json(std::uint64_t p, const QPoly& g, const std::vector<FactorReport>& reports);

}  // namespace maclane
