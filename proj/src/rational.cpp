#include "maclane/rational.hpp"

#include <cctype>

#include "maclane/errors.hpp"

namespace maclane {

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw InputError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Integer n, d(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, n)) throw InputError("bad rational: '" + std::string(text) + "'");
  } else {
    if (!parse_integer(trim(s.substr(0, slash)), n) ||
        !parse_integer(trim(s.substr(slash + 1)), d))
      throw InputError("bad rational: '" + std::string(text) + "'");
  }
  return make_rational(n, d);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.infinite_ = true;
  return r;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw MathError("value of infinity requested");
  return value_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return ExtRational::infinity();
  return ExtRational(Rational(a.value_ + b.value_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRational::str() const { return infinite_ ? "inf" : to_string(value_); }

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw InputError("prime too large: " + std::to_string(p));
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
}

long vp(const Integer& n, std::uint64_t p) {
  if (n == 0) throw MathError("vp of zero integer");
  Integer rest, pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

ExtRational vp(const Rational& q, std::uint64_t p) {
  if (q == 0) return ExtRational::infinity();
  return ExtRational(Rational(vp(q.get_num(), p) - vp(q.get_den(), p)));
}

Rational p_power(std::uint64_t p, long k) {
  Integer t;
  mpz_ui_pow_ui(t.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(t);
  return make_rational(Integer(1), t);
}

}  // namespace maclane
