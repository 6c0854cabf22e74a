#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maclane/rational.hpp"

namespace maclane {

// Dense polynomial over Q, coefficient i multiplies x^i. Zero has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);
  static QPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  bool is_monic() const;
  bool is_integral() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly pow(unsigned k) const;
  Rational eval(const Rational& t) const;
  QPoly derivative() const;
  QPoly monic() const;
  // Multiply by x^k.
  QPoly shift(int k) const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact quotient part
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic, or zero

Rational resultant(const QPoly& f, const QPoly& g);

// Yun decomposition of a monic polynomial: list of (part, multiplicity), parts squarefree,
// pairwise coprime, product of part^multiplicity equals the input.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

// Accepts "a0,a1,...,an" or human syntax such as "x^3 - x^2 - 2*x - 8".
QPoly parse_qpoly(std::string_view text);
// Compact human syntax, descending degree: "x^3-x^2-2*x-8".
std::string to_string(const QPoly& f, char var = 'x');

}  // namespace maclane
