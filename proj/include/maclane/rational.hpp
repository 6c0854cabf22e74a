#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace maclane {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms with positive denominator.
Rational make_rational(const Integer& n, const Integer& d);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);  // result in [0, |b|)
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Rational extended by +infinity.
class ExtRational {
 public:
  ExtRational() = default;  // zero
  ExtRational(const Rational& q) : value_(q) {}  // NOLINT(implicit)
  ExtRational(long v) : value_(v) {}             // NOLINT(implicit)
  static ExtRational infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const Rational& value() const;  // throws on infinity

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  std::string str() const;  // "inf" for infinity

 private:
  Rational value_{0};
  bool infinite_ = false;
};

ExtRational min(const ExtRational& a, const ExtRational& b);

bool is_prime(std::uint64_t p);
// Throws InputError unless 2 <= p < 2^31 is prime.
void require_prime(std::uint64_t p);

long vp(const Integer& n, std::uint64_t p);  // n != 0
ExtRational vp(const Rational& q, std::uint64_t p);

// Integer power of p (negative exponents give 1/p^k).
Rational p_power(std::uint64_t p, long k);

}  // namespace maclane
