#include "maclane/qpoly.hpp"

#include <cctype>

#include "maclane/errors.hpp"

namespace maclane {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return QPoly(std::move(v));
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
  return c_.back();
}

bool QPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool QPoly::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result = constant(Rational(1)), base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

QPoly QPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const bool unit = b.leading() == 1;
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational t = r[static_cast<std::size_t>(k + db)];
    if (t == 0) continue;
    if (!unit) t /= b.leading();
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational resultant(const QPoly& f0, const QPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) throw MathError("resultant of zero polynomial");
  QPoly f = f0, g = g0;
  Rational acc(1);
  for (;;) {
    const long m = f.degree(), n = g.degree();
    if (n == 0) {
      Rational t(1);
      for (long i = 0; i < m; ++i) t *= g.leading();
      return acc * t;
    }
    if (m == 0) {
      Rational t(1);
      for (long i = 0; i < n; ++i) t *= f.leading();
      return acc * t;
    }
    QPoly r = f % g;
    if (r.is_zero()) return Rational(0);
    // Res(f,g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
    if ((m * n) % 2 != 0) acc = -acc;
    for (long i = 0; i < m - r.degree(); ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(r);
  }
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() <= 0) return out;
  QPoly a = f.monic();
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    QPoly y = gcd(c, d);
    if (y.degree() > 0) out.emplace_back(y, i);
    QPoly nc = c / y;
    d = d / y - nc.derivative();
    c = std::move(nc);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QPoly parse() {
    QPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("bad polynomial '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QPoly expr() {
    QPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        QPoly t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else if (first) {
        acc = term();
      } else {
        return acc;
      }
      first = false;
    }
  }

  QPoly term() {
    QPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        QPoly d = power();
        if (d.degree() != 0) fail("division by a non-constant");
        acc *= Rational(1 / d.leading());
      } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  QPoly power() {
    QPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (k > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  QPoly primary() {
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return QPoly::x();
    }
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)), 10);
      return QPoly::constant(Rational(n));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    std::vector<Rational> c;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return QPoly(std::move(c));
  }
  return Parser(text).parse();
}

std::string to_string(const QPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::string mono;
    if (k == 1)
      mono = std::string(1, var);
    else if (k > 1)
      mono = std::string(1, var) + "^" + std::to_string(k);
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace maclane
