#pragma once
// Independent reference computations used only by tests.

#include <algorithm>
#include <random>
#include <vector>

#include "maclane/finite_field.hpp"
#include "maclane/qpoly.hpp"
#include "maclane/rational.hpp"

namespace oracle {

using maclane::FFElem;
using maclane::FFPoly;
using maclane::Integer;
using maclane::QPoly;
using maclane::Rational;
using maclane::TowerPtr;

// Determinant of the Sylvester matrix by rational Gaussian elimination.
inline Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  if (N == 0) return Rational(1);
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
  Rational det(1);
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const Rational pv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= pv;
    for (int r = c + 1; r < N; ++r) {
      Rational fct = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / pv;
      if (fct == 0) continue;
      for (int k = c; k < N; ++k) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= fct * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  return det;
}

inline QPoly from_roots(const std::vector<long>& roots, long lead = 1) {
  QPoly f = QPoly::constant(Rational(lead));
  for (long r : roots) f *= QPoly{-r, 1};
  return f;
}

// All elements of a level, enumerated by flat coordinates.
inline std::vector<FFElem> all_elements(const TowerPtr& t, int level) {
  std::vector<FFElem> out;
  const std::size_t d = t->dim(level);
  std::vector<std::uint32_t> c(d, 0);
  for (;;) {
    out.emplace_back(t, level, c);
    std::size_t k = 0;
    while (k < d && ++c[k] == t->p()) c[k++] = 0;
    if (k == d) break;
  }
  return out;
}

inline FFElem random_elem(const TowerPtr& t, int level, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(t->p() - 1));
  std::vector<std::uint32_t> c(t->dim(level));
  for (auto& v : c) v = dist(rng);
  return FFElem(t, level, c);
}

inline FFPoly random_ffpoly(const TowerPtr& t, int level, int degree, std::mt19937_64& rng) {
  std::vector<FFElem> v;
  for (int k = 0; k < degree; ++k) v.push_back(random_elem(t, level, rng));
  FFElem lead = random_elem(t, level, rng);
  while (lead.is_zero()) lead = random_elem(t, level, rng);
  v.push_back(lead);
  return FFPoly(t, level, v);
}

inline QPoly random_qpoly(std::mt19937_64& rng, int degree, long bound, bool monic) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Rational> c;
  for (int k = 0; k < degree; ++k) c.emplace_back(dist(rng));
  long lead = monic ? 1 : dist(rng);
  while (lead == 0) lead = dist(rng);
  c.emplace_back(lead);
  return QPoly(c);
}

// Value of g under [mu0; (x + c, lambda)] for an integer c, via the explicit binomial Taylor shift.
inline maclane::ExtRational depth1_linear_value(std::uint64_t p, long c, const Rational& lambda, const QPoly& g) {
  if (g.is_zero()) return maclane::ExtRational::infinity();
  maclane::ExtRational best = maclane::ExtRational::infinity();
  const int n = g.degree();
  for (int i = 0; i <= n; ++i) {
    Rational b(0);
    for (int k = i; k <= n; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), Integer(-c).get_mpz_t(), static_cast<unsigned long>(k - i));
      b += g.coeff(k) * Rational(binom * pw);
    }
    if (b == 0) continue;
    best = maclane::min(best, maclane::vp(b, p) + maclane::ExtRational(Rational(lambda * i)));
  }
  return best;
}

// Integer-coefficient evaluation of a polynomial with integer coefficients.
inline Integer eval_int(const QPoly& g, const Integer& x) {
  Integer acc(0);
  for (int i = g.degree(); i >= 0; --i) acc = acc * x + g.coeff(i).get_num();
  return acc;
}

// p-adic valuation of a nonzero integer, capped at cap.
inline long val_int(Integer n, unsigned long p, long cap) {
  if (n == 0) return cap;
  long v = 0;
  while (v < cap && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return v;
}

// Roots in Z_p of an integral squarefree polynomial, modulo p^N. Candidates are refined digit by
// digit until Newton's condition v(g(r)) > 2 v(g'(r)) holds with the disk inside the uniqueness
// radius, then lifted by Newton iteration.
inline std::vector<Integer> padic_roots(const QPoly& g, unsigned long p, long N) {
  const long cap = 40 * N;
  Integer pN;
  mpz_ui_pow_ui(pN.get_mpz_t(), p, static_cast<unsigned long>(N));
  QPoly dg = g.derivative();
  std::vector<Integer> roots;
  struct Cand {
    Integer r;
    long k;
  };
  std::vector<Cand> work;
  for (unsigned long t = 0; t < p; ++t) work.push_back({Integer(t), 1});
  while (!work.empty()) {
    Cand c = work.back();
    work.pop_back();
    const long vg = val_int(eval_int(g, c.r), p, cap);
    if (vg < c.k) continue;
    const long d = val_int(eval_int(dg, c.r), p, cap);
    if (vg > 2 * d && c.k > d) {  // the Newton root is the only one in this residue disk
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(N + 2 * d + 2));
      Integer x = c.r;
      for (int it = 0; it < 64; ++it) {
        Integer gx = eval_int(g, x), dx = eval_int(dg, x);
        if (val_int(gx, p, cap) >= N + d + 1) break;
        Integer pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
        Integer unit = dx / pd, inv, num = gx / pd;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        x = x - num * inv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
      }
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pN.get_mpz_t());
      bool seen = false;
      for (const auto& q : roots) seen = seen || q == r;
      if (!seen) roots.push_back(r);
      continue;
    }
    if (c.k > N + 2 * cap) continue;
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(c.k));
    for (unsigned long t = 0; t < p; ++t) work.push_back({c.r + Integer(t) * pk, c.k + 1});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// v(h(theta)) from a root known modulo p^N; exact whenever the result is below N.
inline long value_at_approx_root(const QPoly& h, const Integer& root, unsigned long p, long N) {
  Integer den(1);
  for (const auto& c : h.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  QPoly hi = h * Rational(den);
  return val_int(eval_int(hi, root), p, N) - val_int(den, p, N);
}

}  // namespace oracle
