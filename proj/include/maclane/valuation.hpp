#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maclane/finite_field.hpp"
#include "maclane/qpoly.hpp"
#include "maclane/rational.hpp"

namespace maclane {

struct ChainStep {
  QPoly phi;
  Rational lambda;
};

// Numerical data attached to level i of a chain (level 0 is the Gauss valuation, phi_0 = x).
struct LevelInvariants {
  long e = 1;            // e_i
  Integer h{0};          // h_i, with e(mu_{i-1}) lambda_i = h_i / e_i
  long f = 0;            // f_i = deg psi_i, zero at the top level
  long m = 1;            // deg phi_i
  Rational w{0};         // mu_{i-1}(phi_i)
  Integer V{0};          // e(mu_{i-1}) w_i
  Rational C{0};         // (w_i + lambda_i) / m_i
  Rational lambda{0};    // lambda_i
  Integer ell{0};        // l_i h_i + l'_i e_i = 1, 0 <= l_i < e_i
  Integer ell_prime{1};
  long e_mu = 1;         // e(mu_i)
};

struct Invariants {
  std::vector<LevelInvariants> levels;
  long e_mu = 1;
  Rational gamma_generator{1};  // Gamma(mu) = gamma_generator * Z
};

// An inductive valuation given by an optimal MacLane chain, together with the residue field tower.
class Valuation {
 public:
  static Valuation mu0(std::uint64_t p);
  // Applies augment step by step, so non-optimal inputs are normalized.
  static Valuation from_chain(std::uint64_t p, const std::vector<ChainStep>& steps);

  Valuation augment(const QPoly& phi, const Rational& lambda) const;
  Valuation truncate(int depth) const;

  std::uint64_t p() const { return p_; }
  int depth() const { return static_cast<int>(steps_.size()); }
  const std::vector<ChainStep>& steps() const { return steps_; }
  const QPoly& phi(int i) const;  // 1 <= i <= depth
  const Rational& lambda(int i) const;
  const LevelInvariants& level(int i) const { return levels_.at(static_cast<std::size_t>(i)); }
  const LevelInvariants& top() const { return levels_.back(); }
  long e_mu() const { return top().e_mu; }
  Rational C() const { return top().C; }
  // mu_i(phi_i) = w_i + lambda_i.
  Rational phi_value(int i) const;
  const TowerPtr& tower() const { return tower_; }

  ExtRational operator()(const QPoly& g) const { return value_at(depth(), g); }
  // Value under the truncation mu_level.
  ExtRational value_at(int level, const QPoly& g) const;

 private:
  Valuation() = default;
  std::uint64_t p_ = 0;
  std::vector<ChainStep> steps_;
  std::vector<LevelInvariants> levels_;
  TowerPtr tower_;
};

std::vector<QPoly> phi_expansion(const QPoly& g, const QPoly& phi);
QPoly reassemble(const std::vector<QPoly>& expansion, const QPoly& phi);

inline Valuation mu0(std::uint64_t p) { return Valuation::mu0(p); }
inline ExtRational valuate(const Valuation& mu, const QPoly& g) { return mu(g); }
inline Valuation augment(const Valuation& mu, const QPoly& phi, const Rational& lambda) {
  return mu.augment(phi, lambda);
}

Invariants invariants(const Valuation& mu);
// Chains are normalized on construction; this is the identity on stored valuations.
Valuation optimize_chain(const Valuation& mu);
Valuation optimize_chain(std::uint64_t p, const std::vector<ChainStep>& steps);
bool equals(const Valuation& mu, const Valuation& nu);

// g ~_mu h
bool mu_equivalent(const Valuation& mu, const QPoly& g, const QPoly& h);
bool is_minimal(const Valuation& mu, const QPoly& g);

// Exponent vectors over the basis (p, phi_1, ..., phi_r).
using ExponentVector = std::vector<Integer>;
struct RationalFunctions {
  std::vector<ExponentVector> pi;     // pi[i] for 1 <= i <= r+1 (index 0 unused)
  std::vector<ExponentVector> Phi;    // Phi[i] for 1 <= i <= r
  std::vector<ExponentVector> gamma;  // gamma[i] for 1 <= i <= r
};
RationalFunctions rational_functions(const Valuation& mu);
// Value of p^{n_0} prod phi_j^{n_j} under mu_level.
Rational exponent_value(const Valuation& mu, int level, const ExponentVector& n);

std::string chain_to_json(const Valuation& mu);
Valuation chain_from_json(const std::string& text);

}  // namespace maclane
