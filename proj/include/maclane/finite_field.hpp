#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "maclane/rational.hpp"

namespace maclane {

class FFTower;
class FFPoly;
using TowerPtr = std::shared_ptr<const FFTower>;

// Element of level L of a tower F_0 = F_p ⊂ F_1 ⊂ ... . Stored flat: level L is
// F_{L-1}[z_{L-1}] and the coordinates are the level L-1 coefficients of
// 1, z_{L-1}, z_{L-1}^2, ..., each occupying dim(L-1) slots.
class FFElem {
 public:
  FFElem() = default;
  FFElem(TowerPtr tower, int level, std::vector<std::uint32_t> flat);

  static FFElem zero(const TowerPtr& tower, int level);
  static FFElem one(const TowerPtr& tower, int level);
  static FFElem from_int(const TowerPtr& tower, int level, long long v);
  static FFElem from_integer(const TowerPtr& tower, int level, const Integer& v);
  // Σ c_k z_{level-1}^k with every c_k of level-1.
  static FFElem from_coords(const TowerPtr& tower, int level, const std::vector<FFElem>& coords);

  const TowerPtr& tower() const { return tower_; }
  int level() const { return level_; }
  const std::vector<std::uint32_t>& flat() const { return c_; }
  std::vector<FFElem> coords() const;  // over level-1; requires level > 0

  bool is_zero() const;
  bool is_one() const;

  FFElem operator-() const;
  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
  FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
  FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
  friend bool operator==(const FFElem& a, const FFElem& b);

  FFElem inverse() const;
  FFElem pow(const Integer& k) const;  // negative k allowed for nonzero elements
  FFElem embed(int target_level) const;

  std::string str() const;
  bool is_atomic_str() const;  // printed form needs no parentheses as a factor

 private:
  TowerPtr tower_;
  int level_ = 0;
  std::vector<std::uint32_t> c_;
};

bool lex_less(const FFElem& a, const FFElem& b);

FFElem ff_embed(const FFElem& a, int target_level);

// Dense polynomial in y over one level of a tower.
class FFPoly {
 public:
  FFPoly() = default;
  FFPoly(TowerPtr tower, int level);  // zero
  FFPoly(TowerPtr tower, int level, std::vector<FFElem> coeffs);
  static FFPoly constant(const FFElem& c);
  static FFPoly y(const TowerPtr& tower, int level);
  static FFPoly monomial(const FFElem& c, int degree);
  // Coefficients given as integers mod p, low degree first.
  static FFPoly from_ints(const TowerPtr& tower, int level, const std::vector<long long>& coeffs);

  const TowerPtr& tower() const { return tower_; }
  int level() const { return level_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FFElem>& coeffs() const { return c_; }
  FFElem coeff(int i) const;
  const FFElem& leading() const;
  bool is_monic() const;
  FFPoly monic() const;
  // Largest k with y^k dividing this (zero for the zero polynomial).
  int ord_y() const;

  FFPoly operator-() const;
  friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFElem& c);
  friend bool operator==(const FFPoly& a, const FFPoly& b);

  FFPoly shift(int k) const;        // times y^k
  FFPoly unshift(int k) const;      // drop the k lowest coefficients
  FFElem eval(const FFElem& t) const;
  FFPoly derivative() const;
  FFPoly pow(unsigned k) const;
  FFPoly embed(int target_level) const;
  // Substitute y -> y + t.
  FFPoly translate(const FFElem& t) const;

  std::string str(const std::string& var = "y") const;

 private:
  void normalize();
  TowerPtr tower_;
  int level_ = 0;
  std::vector<FFElem> c_;
};

bool lex_less(const FFPoly& a, const FFPoly& b);

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly operator%(const FFPoly& a, const FFPoly& b);
FFPoly ff_gcd(FFPoly a, FFPoly b);  // monic or zero
FFPoly powmod(const FFPoly& base, const Integer& e, const FFPoly& mod);

// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f, std::uint64_t seed = 0x5eed);
bool ff_is_irreducible(const FFPoly& f);

class FFTower : public std::enable_shared_from_this<FFTower> {
 public:
  static TowerPtr prime_field(std::uint64_t p);
  // New tower with one more level F_{d+1} = F_d[y]/(psi), psi monic irreducible over the top.
  TowerPtr extend(const FFPoly& psi) const;
  // The first levels F_0 ⊂ ... ⊂ F_depth of this tower.
  TowerPtr prefix(int depth) const;

  std::uint64_t p() const { return p_; }
  int depth() const { return static_cast<int>(psi_.size()); }
  std::size_t dim(int level) const { return dims_.at(static_cast<std::size_t>(level)); }
  int degree(int level) const { return psi_.at(static_cast<std::size_t>(level)).degree(); }
  const FFPoly& psi(int i) const { return psi_.at(static_cast<std::size_t>(i)); }
  FFElem z(int i) const;  // root of psi_i, lives at level i+1
  Integer order(int level) const;  // p^dim(level)
  bool is_prefix_of(const FFTower& other) const;

  using Raw = std::vector<std::uint32_t>;
  Raw mul(int level, const Raw& a, const Raw& b) const;

 private:
  FFTower() = default;
  void mul_into(int level, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;

  std::uint64_t p_ = 0;
  std::vector<FFPoly> psi_;
  std::vector<std::vector<Raw>> psi_raw_;  // monic psi_i coefficients, flat, low degree first
  std::vector<std::size_t> dims_;
};

}  // namespace maclane
