#pragma once

#include <utility>

#include "maclane/finite_field.hpp"
#include "maclane/qpoly.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

struct SU {
  long s = 0;
  Integer u{0};
};

// u e_i + s h_i = e(mu_i) alpha with 0 <= s < e_i.
SU s_u_of_alpha(const Valuation& mu, int level, const Rational& alpha);
// Element of F_{level+1}; 0 <= level < depth.
FFElem epsilon(const Valuation& mu, int level, const Rational& alpha);

FFPoly R_alpha(const Valuation& mu, int level, const Rational& alpha, const QPoly& g);
FFPoly residual_polynomial(const Valuation& mu, int level, const QPoly& g);
inline FFPoly residual_polynomial(const Valuation& mu, const QPoly& g) {
  return residual_polynomial(mu, mu.depth(), g);
}

struct HomogElem {
  long s = 0;
  Integer u{0};
  FFPoly R;
  Rational degree(const Valuation& mu) const;
  friend HomogElem operator*(const HomogElem& a, const HomogElem& b);
  friend bool operator==(const HomogElem& a, const HomogElem& b) {
    return a.s == b.s && a.u == b.u && a.R == b.R;
  }
};
HomogElem homog(const Valuation& mu, const QPoly& g);

struct ResidualIdeal {
  long k = 0;
  FFPoly psi_part;
  friend bool operator==(const ResidualIdeal& a, const ResidualIdeal& b) {
    return a.k == b.k && a.psi_part == b.psi_part;
  }
};
ResidualIdeal residual_ideal(const Valuation& mu, const QPoly& g);

struct KeyPolyStatus {
  bool key = false;
  bool proper = false;
  bool strong = false;
};
KeyPolyStatus is_key_poly(const Valuation& mu, const QPoly& phi);

long ord_key(const Valuation& mu, const QPoly& phi, const QPoly& g);
// Same as ord_key without re-checking that phi is a key polynomial.
long ord_key_unchecked(const Valuation& mu, const QPoly& phi, const QPoly& g);

QPoly construct_key_poly(const Valuation& mu, const FFPoly& psi);
// Some a with mu_level(a) >= beta and R_{level,beta}(a) = P; equality of values when P != 0.
QPoly residual_lift(const Valuation& mu, int level, const Rational& beta, const FFPoly& P);

}  // namespace maclane
