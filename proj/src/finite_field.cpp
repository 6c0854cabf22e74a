#include "maclane/finite_field.hpp"

#include <algorithm>
#include <random>

#include "maclane/errors.hpp"

namespace maclane {

// ---------------------------------------------------------------- tower

TowerPtr FFTower::prime_field(std::uint64_t p) {
  require_prime(p);
  auto t = std::shared_ptr<FFTower>(new FFTower());
  t->p_ = p;
  t->dims_ = {1};
  return t;
}

TowerPtr FFTower::extend(const FFPoly& psi) const {
  if (psi.level() != depth()) throw MathError("extension polynomial must live at the top level");
  if (!psi.is_monic() || psi.degree() < 1) throw MathError("extension polynomial must be monic of positive degree");
  if (!ff_is_irreducible(psi)) throw MathError("extension polynomial is reducible: " + psi.str());
  auto t = std::shared_ptr<FFTower>(new FFTower(*this));
  t->psi_.push_back(psi);
  std::vector<Raw> raw;
  for (int k = 0; k < psi.degree(); ++k) {
    Raw r = psi.coeff(k).flat();
    r.resize(dim(depth()), 0);
    raw.push_back(std::move(r));
  }
  t->psi_raw_.push_back(std::move(raw));
  t->dims_.push_back(dim(depth()) * static_cast<std::size_t>(psi.degree()));
  return t;
}

TowerPtr FFTower::prefix(int d) const {
  if (d < 0 || d > depth()) throw MathError("bad tower prefix depth");
  if (d == depth()) return shared_from_this();
  auto t = std::shared_ptr<FFTower>(new FFTower(*this));
  t->psi_.resize(static_cast<std::size_t>(d));
  t->psi_raw_.resize(static_cast<std::size_t>(d));
  t->dims_.resize(static_cast<std::size_t>(d) + 1);
  return t;
}

FFElem FFTower::z(int i) const {
  if (i < 0 || i >= depth()) throw MathError("no generator at level " + std::to_string(i));
  TowerPtr self = shared_from_this();
  const FFPoly& ps = psi(i);
  if (ps.degree() == 1) return FFElem(self, i, (-ps.coeff(0)).flat()).embed(i + 1);
  std::vector<FFElem> coords{FFElem::zero(self, i), FFElem::one(self, i)};
  return FFElem::from_coords(self, i + 1, coords);
}

Integer FFTower::order(int level) const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, static_cast<unsigned long>(dim(level)));
  return q;
}

bool FFTower::is_prefix_of(const FFTower& other) const {
  if (p_ != other.p_ || depth() > other.depth()) return false;
  for (int i = 0; i < depth(); ++i)
    if (psi_raw_[static_cast<std::size_t>(i)] != other.psi_raw_[static_cast<std::size_t>(i)]) return false;
  return true;
}

void FFTower::mul_into(int level, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (level == 0) {
    out[0] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[0]) * b[0]) % p_);
    return;
  }
  const std::size_t d = dim(level - 1);
  const int f = degree(level - 1);
  const std::size_t nprod = static_cast<std::size_t>(2 * f - 1);
  std::vector<std::uint32_t> prod(nprod * d, 0), tmp(d);
  auto add_to = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (std::size_t k = 0; k < d; ++k) {
      std::uint64_t s = static_cast<std::uint64_t>(dst[k]) + src[k];
      dst[k] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
  };
  auto sub_from = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (std::size_t k = 0; k < d; ++k) dst[k] = static_cast<std::uint32_t>(dst[k] >= src[k] ? dst[k] - src[k] : dst[k] + p_ - src[k]);
  };
  auto nonzero = [&](const std::uint32_t* x) {
    for (std::size_t k = 0; k < d; ++k)
      if (x[k]) return true;
    return false;
  };
  for (int i = 0; i < f; ++i) {
    if (!nonzero(a + i * d)) continue;
    for (int j = 0; j < f; ++j) {
      if (!nonzero(b + j * d)) continue;
      mul_into(level - 1, a + i * d, b + j * d, tmp.data());
      add_to(prod.data() + static_cast<std::size_t>(i + j) * d, tmp.data());
    }
  }
  const auto& ps = psi_raw_[static_cast<std::size_t>(level - 1)];
  for (int k = 2 * f - 2; k >= f; --k) {
    const std::uint32_t* c = prod.data() + static_cast<std::size_t>(k) * d;
    if (!nonzero(c)) continue;
    std::vector<std::uint32_t> cc(c, c + d);
    for (int t = 0; t < f; ++t) {
      mul_into(level - 1, cc.data(), ps[static_cast<std::size_t>(t)].data(), tmp.data());
      sub_from(prod.data() + static_cast<std::size_t>(k - f + t) * d, tmp.data());
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(f) * d), out);
}

FFTower::Raw FFTower::mul(int level, const Raw& a, const Raw& b) const {
  Raw out(dim(level), 0);
  mul_into(level, a.data(), b.data(), out.data());
  return out;
}

// ---------------------------------------------------------------- elements

namespace {

const TowerPtr& pick_tower(const FFElem& a, const FFElem& b) {
  if (!a.tower()) return b.tower();
  if (!b.tower()) return a.tower();
  if (a.tower()->p() != b.tower()->p()) throw MathError("finite field elements over different primes");
  return a.tower()->depth() >= b.tower()->depth() ? a.tower() : b.tower();
}

}  // namespace

FFElem::FFElem(TowerPtr tower, int level, std::vector<std::uint32_t> flat)
    : tower_(std::move(tower)), level_(level), c_(std::move(flat)) {
  if (!tower_ || level_ < 0 || level_ > tower_->depth()) throw MathError("bad finite field level");
  if (c_.size() != tower_->dim(level_)) throw MathError("bad finite field coordinate length");
}

FFElem FFElem::zero(const TowerPtr& tower, int level) {
  return FFElem(tower, level, std::vector<std::uint32_t>(tower->dim(level), 0));
}

FFElem FFElem::one(const TowerPtr& tower, int level) { return from_int(tower, level, 1); }

FFElem FFElem::from_int(const TowerPtr& tower, int level, long long v) {
  auto p = static_cast<long long>(tower->p());
  long long r = v % p;
  if (r < 0) r += p;
  std::vector<std::uint32_t> c(tower->dim(level), 0);
  c[0] = static_cast<std::uint32_t>(r);
  return FFElem(tower, level, std::move(c));
}

FFElem FFElem::from_integer(const TowerPtr& tower, int level, const Integer& v) {
  Integer r = mod_floor(v, Integer(static_cast<unsigned long>(tower->p())));
  return from_int(tower, level, static_cast<long long>(r.get_ui()));
}

FFElem FFElem::from_coords(const TowerPtr& tower, int level, const std::vector<FFElem>& coords) {
  if (level == 0) throw MathError("level 0 has no coordinates");
  const std::size_t d = tower->dim(level - 1);
  const auto f = static_cast<std::size_t>(tower->degree(level - 1));
  if (coords.size() > f) throw MathError("too many coordinates");
  std::vector<std::uint32_t> flat(tower->dim(level), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].level() > level - 1) throw MathError("coordinate above previous level");
    FFElem c = FFElem(tower, coords[k].level(), coords[k].flat()).embed(level - 1);
    std::copy(c.c_.begin(), c.c_.end(), flat.begin() + static_cast<std::ptrdiff_t>(k * d));
  }
  return FFElem(tower, level, std::move(flat));
}

std::vector<FFElem> FFElem::coords() const {
  if (level_ == 0) throw MathError("level 0 has no coordinates");
  const std::size_t d = tower_->dim(level_ - 1);
  std::vector<FFElem> out;
  for (std::size_t k = 0; k < c_.size(); k += d)
    out.emplace_back(tower_, level_ - 1, std::vector<std::uint32_t>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.begin() + static_cast<std::ptrdiff_t>(k + d)));
  return out;
}

bool FFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FFElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FFElem FFElem::embed(int target_level) const {
  if (target_level < level_) throw MathError("cannot embed into a lower level");
  if (target_level == level_) return *this;
  std::vector<std::uint32_t> c = c_;
  c.resize(tower_->dim(target_level), 0);
  return FFElem(tower_, target_level, std::move(c));
}

FFElem ff_embed(const FFElem& a, int target_level) { return a.embed(target_level); }

FFElem FFElem::operator-() const {
  FFElem r = *this;
  const auto p = static_cast<std::uint32_t>(tower_->p());
  for (auto& v : r.c_) v = v ? p - v : 0;
  return r;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  const TowerPtr& t = pick_tower(a, b);
  int L = std::max(a.level_, b.level_);
  FFElem x(t, a.level_, a.c_), y(t, b.level_, b.c_);
  x = x.embed(L);
  y = y.embed(L);
  const std::uint64_t p = t->p();
  for (std::size_t k = 0; k < x.c_.size(); ++k) {
    std::uint64_t s = static_cast<std::uint64_t>(x.c_[k]) + y.c_[k];
    x.c_[k] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return x;
}

FFElem operator-(const FFElem& a, const FFElem& b) { return a + (-b); }

FFElem operator*(const FFElem& a, const FFElem& b) {
  const TowerPtr& t = pick_tower(a, b);
  int L = std::max(a.level_, b.level_);
  FFElem x = FFElem(t, a.level_, a.c_).embed(L);
  FFElem y = FFElem(t, b.level_, b.c_).embed(L);
  return FFElem(t, L, t->mul(L, x.c_, y.c_));
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in finite field");
  if (level_ == 0) {
    Integer a(c_[0]), m(static_cast<unsigned long>(tower_->p())), r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return from_int(tower_, 0, static_cast<long long>(r.get_ui()));
  }
  return pow(Integer(tower_->order(level_) - 2));
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

FFElem FFElem::pow(const Integer& k) const {
  if (k < 0) return inverse().pow(Integer(-k));
  FFElem result = one(tower_, level_), base = *this;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(k.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

bool operator==(const FFElem& a, const FFElem& b) {
  if (a.level_ == b.level_) return a.c_ == b.c_;
  int L = std::max(a.level_, b.level_);
  const TowerPtr& t = pick_tower(a, b);
  return FFElem(t, a.level_, a.c_).embed(L).c_ == FFElem(t, b.level_, b.c_).embed(L).c_;
}

bool lex_less(const FFElem& a, const FFElem& b) {
  int L = std::max(a.level(), b.level());
  return a.embed(L).flat() < b.embed(L).flat();
}

namespace {

std::string poly_str(const std::vector<FFElem>& coeffs, const std::string& var) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const FFElem& c = coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else if (c.is_atomic_str())
      out += c.str() + "*" + mono;
    else
      out += "(" + c.str() + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string FFElem::str() const {
  if (level_ == 0) return std::to_string(c_[0]);
  return poly_str(coords(), "z" + std::to_string(level_ - 1));
}

bool FFElem::is_atomic_str() const {
  if (level_ == 0) return true;
  auto cs = coords();
  int nz = 0;
  for (const auto& c : cs)
    if (!c.is_zero()) {
      ++nz;
      if (!c.is_atomic_str()) return false;
    }
  return nz <= 1;
}

// ---------------------------------------------------------------- polynomials

FFPoly::FFPoly(TowerPtr tower, int level) : tower_(std::move(tower)), level_(level) {}

FFPoly::FFPoly(TowerPtr tower, int level, std::vector<FFElem> coeffs)
    : tower_(std::move(tower)), level_(level), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.level() > level_) throw MathError("polynomial coefficient above polynomial level");
    if (c.level() < level_ || c.tower() != tower_) c = FFElem(tower_, c.level(), c.flat()).embed(level_);
  }
  normalize();
}

void FFPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FFPoly FFPoly::constant(const FFElem& c) { return FFPoly(c.tower(), c.level(), {c}); }

FFPoly FFPoly::y(const TowerPtr& tower, int level) {
  return FFPoly(tower, level, {FFElem::zero(tower, level), FFElem::one(tower, level)});
}

FFPoly FFPoly::monomial(const FFElem& c, int degree) {
  std::vector<FFElem> v(static_cast<std::size_t>(degree) + 1, FFElem::zero(c.tower(), c.level()));
  v.back() = c;
  return FFPoly(c.tower(), c.level(), std::move(v));
}

FFPoly FFPoly::from_ints(const TowerPtr& tower, int level, const std::vector<long long>& coeffs) {
  std::vector<FFElem> v;
  for (long long c : coeffs) v.push_back(FFElem::from_int(tower, level, c));
  return FFPoly(tower, level, std::move(v));
}

FFElem FFPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return FFElem::zero(tower_, level_);
  return c_[static_cast<std::size_t>(i)];
}

const FFElem& FFPoly::leading() const {
  if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
  return c_.back();
}

bool FFPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FFPoly FFPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inverse();
}

int FFPoly::ord_y() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return c_.empty() ? 0 : k;
}

FFPoly FFPoly::operator-() const {
  FFPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

TowerPtr poly_tower(const FFPoly& a, const FFPoly& b) {
  if (!a.tower()) return b.tower();
  if (!b.tower()) return a.tower();
  return a.tower()->depth() >= b.tower()->depth() ? a.tower() : b.tower();
}

}  // namespace

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
  TowerPtr t = poly_tower(a, b);
  int L = std::max(a.level_, b.level_);
  std::vector<FFElem> v(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), FFElem::zero(t, L));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
  return FFPoly(t, L, std::move(v));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) { return a + (-b); }

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  TowerPtr t = poly_tower(a, b);
  int L = std::max(a.level_, b.level_);
  if (a.is_zero() || b.is_zero()) return FFPoly(t, L);
  std::vector<FFElem> v(a.c_.size() + b.c_.size() - 1, FFElem::zero(t, L));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return FFPoly(t, L, std::move(v));
}

FFPoly operator*(const FFPoly& a, const FFElem& c) {
  TowerPtr t = a.tower_ && a.tower_->depth() >= c.tower()->depth() ? a.tower_ : c.tower();
  int L = std::max(a.level_, c.level());
  std::vector<FFElem> v;
  for (const auto& x : a.c_) v.push_back(x * c);
  return FFPoly(t, L, std::move(v));
}

bool operator==(const FFPoly& a, const FFPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

FFPoly FFPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FFElem> v(static_cast<std::size_t>(k), FFElem::zero(tower_, level_));
  v.insert(v.end(), c_.begin(), c_.end());
  return FFPoly(tower_, level_, std::move(v));
}

FFPoly FFPoly::unshift(int k) const {
  if (k >= static_cast<int>(c_.size())) return FFPoly(tower_, level_);
  return FFPoly(tower_, level_, std::vector<FFElem>(c_.begin() + k, c_.end()));
}

FFElem FFPoly::eval(const FFElem& t) const {
  int L = std::max(level_, t.level());
  FFElem acc = FFElem::zero(t.tower()->depth() >= (tower_ ? tower_->depth() : 0) ? t.tower() : tower_, L);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

FFPoly FFPoly::derivative() const {
  if (c_.size() <= 1) return FFPoly(tower_, level_);
  std::vector<FFElem> v;
  for (std::size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i] * FFElem::from_int(tower_, level_, static_cast<long long>(i % tower_->p())));
  return FFPoly(tower_, level_, std::move(v));
}

FFPoly FFPoly::pow(unsigned k) const {
  FFPoly result = constant(FFElem::one(tower_, level_)), base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

FFPoly FFPoly::embed(int target_level) const {
  std::vector<FFElem> v;
  for (const auto& c : c_) v.push_back(c.embed(target_level));
  return FFPoly(tower_, target_level, std::move(v));
}

FFPoly FFPoly::translate(const FFElem& t) const {
  // Horner in the polynomial ring: acc = acc*(y+t) + c
  int L = std::max(level_, t.level());
  FFPoly lin(tower_->depth() >= t.tower()->depth() ? tower_ : t.tower(), L, {t, FFElem::one(t.tower(), L)});
  FFPoly acc(lin.tower(), L);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(it->embed(L));
  return acc;
}

std::string FFPoly::str(const std::string& var) const { return poly_str(c_, var); }

bool lex_less(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const FFElem &x = a.coeffs()[static_cast<std::size_t>(k)], &y = b.coeffs()[static_cast<std::size_t>(k)];
    if (lex_less(x, y)) return true;
    if (lex_less(y, x)) return false;
  }
  return false;
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  TowerPtr t = poly_tower(a, b);
  int L = std::max(a.level(), b.level());
  if (a.degree() < b.degree()) return {FFPoly(t, L), a.embed(L)};
  std::vector<FFElem> r;
  for (const auto& c : a.coeffs()) r.push_back(c.embed(L));
  const int db = b.degree();
  FFElem inv = b.leading().inverse();
  std::vector<FFElem> q(static_cast<std::size_t>(a.degree() - db) + 1, FFElem::zero(t, L));
  for (int k = a.degree() - db; k >= 0; --k) {
    FFElem c = r[static_cast<std::size_t>(k + db)];
    if (c.is_zero()) continue;
    c = c * inv;
    q[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db), FFElem::zero(t, L));
  return {FFPoly(t, L, std::move(q)), FFPoly(t, L, std::move(r))};
}

FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divmod(a, b).second; }

FFPoly ff_gcd(FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    FFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly powmod(const FFPoly& base, const Integer& e, const FFPoly& mod) {
  FFPoly result = FFPoly::constant(FFElem::one(mod.tower(), mod.level())) % mod;
  FFPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

namespace {

using Factors = std::vector<std::pair<FFPoly, int>>;

FFPoly pth_root(const FFPoly& f) {
  const auto p = static_cast<int>(f.tower()->p());
  const int L = f.level();
  Integer e = f.tower()->order(L) / static_cast<unsigned long>(p);
  std::vector<FFElem> v;
  for (int k = 0; k <= f.degree(); k += p) v.push_back(f.coeff(k).pow(e));
  return FFPoly(f.tower(), L, std::move(v));
}

// f monic.
Factors squarefree(const FFPoly& f) {
  Factors out;
  FFPoly c = ff_gcd(f, f.derivative());
  FFPoly w = divmod(f, c).first;
  for (int i = 1; w.degree() > 0; ++i) {
    FFPoly y = ff_gcd(w, c);
    FFPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<int>(f.tower()->p());
    for (auto& [g, m] : squarefree(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

// f monic squarefree; returns (product of irreducibles of degree d, d).
std::vector<std::pair<FFPoly, int>> distinct_degree(FFPoly f) {
  std::vector<std::pair<FFPoly, int>> out;
  const Integer q = f.tower()->order(f.level());
  const FFPoly y = FFPoly::y(f.tower(), f.level());
  FFPoly h = y % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, q, f);
    FFPoly g = ff_gcd(f, h - y);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

FFElem random_elem(const TowerPtr& t, int level, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(t->p() - 1));
  std::vector<std::uint32_t> c(t->dim(level));
  for (auto& v : c) v = dist(rng);
  return FFElem(t, level, std::move(c));
}

void equal_degree(const FFPoly& f, int d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const TowerPtr& t = f.tower();
  const int L = f.level();
  const Integer q = t->order(L);
  const bool even = t->p() == 2;
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  for (;;) {
    std::vector<FFElem> v;
    for (int k = 0; k < f.degree(); ++k) v.push_back(random_elem(t, L, rng));
    FFPoly a(t, L, std::move(v));
    if (a.degree() < 1) continue;
    FFPoly b(t, L);
    if (even) {
      // absolute trace to F_2
      const std::size_t n = t->dim(L) * static_cast<std::size_t>(d);
      FFPoly term = a % f;
      b = term;
      for (std::size_t j = 1; j < n; ++j) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      b = powmod(a, Integer((qd - 1) / 2), f) - FFPoly::constant(FFElem::one(t, L));
    }
    FFPoly g = ff_gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw MathError("factorization of the zero polynomial");
  Factors out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  for (auto& [part, mult] : squarefree(f.monic())) {
    for (auto& [prod, d] : distinct_degree(part)) {
      std::vector<FFPoly> irr;
      equal_degree(prod, d, rng, irr);
      for (auto& g : irr) out.emplace_back(g.monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return out;
}

bool ff_is_irreducible(const FFPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fs = ff_factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace maclane
