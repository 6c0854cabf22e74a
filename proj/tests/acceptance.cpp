// Acceptance checks 1-10: prints one PASS/FAIL line per criterion and exits nonzero on failure.
// All comparisons are exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/okutsu.hpp"
#include "maclane/random.hpp"
#include "maclane/residual.hpp"
#include "maclane/valuation.hpp"
#include "maclane/verify.hpp"
#include "support/oracles.hpp"

using namespace maclane;

namespace {

QPoly P(const std::string& s) { return parse_qpoly(s); }
Rational Q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Limits in milliseconds.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1000.0;
constexpr double kLimit3 = 1000.0;
constexpr double kLimit4 = 30000.0;
constexpr double kLimit5 = 30000.0;
constexpr double kLimit8 = 5000.0;

int failures = 0;

void run(int id, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (limit_ms > 0 && ms > limit_ms) o.require(false, "time limit " + std::to_string(limit_ms) + " ms exceeded");
  if (!o.ok) ++failures;
  std::printf("%s %2d %-44s %10.3f ms%s%s\n", o.ok ? "PASS" : "FAIL", id, title, ms, o.ok ? "" : "  ",
              o.detail.c_str());
}

struct KeyInstance {
  Valuation mu;
  QPoly phi;
};

KeyInstance random_key(Rng& rng, std::uint64_t p, int depth, int max_key_degree) {
  Valuation mu = random_chain(rng, p, ChainLimits{depth, 2, max_key_degree, 3, 3});
  const int r = mu.depth();
  int d = 1 + static_cast<int>(rng() % 2);
  if (r > 0 && mu.top().e == 1 && d == 1) d = 2;
  FFPoly psi = random_irreducible(mu.tower(), r, d, rng, r > 0);
  return {mu, construct_key_poly(mu, psi)};
}

// Report approximating the root known modulo p^N.
const FactorReport* report_for_root(const std::vector<FactorReport>& reps, const Integer& root, std::uint64_t p,
                                    long N) {
  for (const auto& r : reps) {
    if (r.phi.degree() != 1) continue;
    long v = oracle::value_at_approx_root(r.phi, root, static_cast<unsigned long>(p), N);
    if (ExtRational(v) >= r.certified_value || (r.exact() && v >= N)) return &r;
  }
  return nullptr;
}

// Compares value_at_root with the lifted-root oracle on random h of degree <= max_deg.
void compare_on_roots(Outcome& o, Rng& rng, const QPoly& g, std::uint64_t p, long N, int samples, int max_deg) {
  auto reps = factor(g, p);
  auto roots = oracle::padic_roots(g, static_cast<unsigned long>(p), N);
  o.require(static_cast<long>(roots.size()) == g.degree(), "polynomial " + to_string(g) + " does not split");
  for (const auto& root : roots) {
    const FactorReport* r = report_for_root(reps, root, p, N);
    o.require(r != nullptr, "no report for a root of " + to_string(g));
    if (!r) return;
    for (int t = 0; t < samples;) {
      QPoly h = oracle::random_qpoly(rng, static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1)), 100, false);
      if (h.is_zero()) continue;
      long want = oracle::value_at_approx_root(h, root, static_cast<unsigned long>(p), N);
      if (want >= N - 5) continue;  // beyond the oracle's precision
      o.require(value_at_root(*r, h) == ExtRational(want), "value mismatch for " + to_string(h));
      ++t;
    }
  }
}

}  // namespace

int main() {
  run(1, "collapse of (x,1/2),(x,1/2) to (x,1)", kLimit1, [](Outcome& o) {
    Valuation half = mu0(2).augment(P("x"), Q(1, 2));
    Valuation twice = half.augment(P("x"), Q(1, 2));
    o.require(half.e_mu() == 2 && invariants(half).gamma_generator == Q(1, 2), "Gamma before");
    o.require(twice.e_mu() == 1 && invariants(twice).gamma_generator == Q(1), "Gamma after");
    o.require(twice.depth() == 1 && twice.lambda(1) == Q(1), "collapsed chain");
    o.require(equals(twice, mu0(2).augment(P("x"), Q(1))), "equality with [mu0;(x,1)]");
  });

  run(2, "Dedekind x^3-x^2-2x-8 at 2", kLimit2, [](Outcome& o) {
    QPoly g = P("x^3-x^2-2*x-8");
    auto reps = factor(g, 2);
    o.require(reps.size() == 3, "three reports");
    for (const auto& r : reps) o.require(r.e == 1 && r.f == 1 && r.depth <= 1, "e = f = 1");
    auto roots = oracle::padic_roots(g, 2, 30);
    o.require(roots.size() == 3, "three lifted roots");
    Integer mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), 2, 30);
    QPoly prod{1};
    for (const auto& r : roots) prod *= QPoly({Rational(-r), Rational(1)});
    for (int i = 0; i <= 3; ++i) {
      Integer d = Rational(prod.coeff(i) - g.coeff(i)).get_num();
      o.require(mpz_divisible_p(d.get_mpz_t(), mod.get_mpz_t()) != 0, "product congruence mod 2^30");
    }
    Rng rng(2);
    compare_on_roots(o, rng, g, 2, 30, 50, 2);
  });

  run(3, "x^4+1 at 2: e=4 f=1 depth 1 frame [x+1]", kLimit3, [](Outcome& o) {
    auto reps = factor(P("x^4+1"), 2);
    o.require(reps.size() == 1, "one report");
    if (reps.size() != 1) return;
    const auto& r = reps[0];
    OkutsuFrame fr = okutsu_frame(r);
    o.require(r.e == 4 && r.f == 1 && r.depth == 1, "e, f, depth");
    o.require(fr.phis.size() == 1 && fr.phis[0] == P("x+1"), "frame");
    o.require(r.muF.lambda(1) == Q(1, 4), "lambda_1");
    o.require(delta0(r) == Q(1), "delta0");
  });

  run(4, "polygon additivity, 1000 pairs", kLimit4, [](Outcome& o) {
    Rng rng(4);
    const Integer bound(1000000);
    int n = 0;
    for (std::uint64_t p : {2u, 3u, 5u}) {
      for (int c = 0; n < 1000 && c < 34; ++c) {
        KeyInstance k = random_key(rng, p, static_cast<int>(rng() % 3), 12);
        for (int t = 0; t < 10 && n < 1000; ++t, ++n) {
          QPoly g = random_poly(rng, static_cast<int>(rng() % 13), bound);
          QPoly h = random_poly(rng, static_cast<int>(rng() % 13), bound);
          NewtonPolygon lhs = principal_part(newton_polygon(k.mu, k.phi, g * h));
          NewtonPolygon rhs = polygon_add(principal_part(newton_polygon(k.mu, k.phi, g)),
                                          principal_part(newton_polygon(k.mu, k.phi, h)));
          o.require(lhs == rhs, "N-(gh) != N-(g)+N-(h)");
        }
      }
    }
    o.require(n == 1000, "pair count");
  });

  run(5, "homogeneous multiplicativity, 500 pairs", kLimit5, [](Outcome& o) {
    Rng rng(5);
    int n = 0;
    for (std::uint64_t p : {2u, 3u, 5u}) {
      for (int c = 0; n < 500 && c < 17; ++c) {
        Valuation mu = random_chain(rng, p, ChainLimits{static_cast<int>(rng() % 3), 2, 12, 3, 3});
        for (int t = 0; t < 10 && n < 500; ++t, ++n) {
          QPoly g = random_poly(rng, static_cast<int>(rng() % 13), 1000000L);
          QPoly h = random_poly(rng, static_cast<int>(rng() % 13), 1000000L);
          o.require(homog(mu, g * h) == homog(mu, g) * homog(mu, h), "homog(gh) != homog(g) homog(h)");
          o.require(residual_polynomial(mu, g * h) == residual_polynomial(mu, g) * residual_polynomial(mu, h),
                    "R(gh) != R(g) R(h)");
        }
      }
    }
    o.require(n == 500, "pair count");
  });

  run(6, "key polynomial round trip, 100 residues", 0, [](Outcome& o) {
    Rng rng(6);
    int n = 0;
    while (n < 100) {
      std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[n % 3];
      Valuation mu = random_chain(rng, p, ChainLimits{n % 3, 2, 16, 3, 3});
      const int r = mu.depth();
      FFPoly psi = random_irreducible(mu.tower(), r, 1 + static_cast<int>(rng() % 3), rng, r > 0);
      QPoly phi = construct_key_poly(mu, psi);
      FFPoly back = r == 0 ? residual_polynomial(mu, 0, phi) : residual_polynomial(mu, phi);
      o.require(is_key_poly(mu, phi).key, "not a key polynomial: " + to_string(phi));
      o.require(back == psi, "residual mismatch for " + to_string(phi));
      ++n;
    }
  });

  run(7, "value at root vs lifted roots at p^60", 0, [](Outcome& o) {
    Rng rng(7);
    const std::vector<std::pair<std::uint64_t, QPoly>> cases{
        {2, P("x^3-x^2-2*x-8")},
        {5, P("x^2+1")},
        {2, P("x^2-17")},
        {3, P("x^2+2")},
        {5, P("x^2+1") * P("x^2-6")},
        {2, P("x^2+7") * P("x^2-17")},
        {3, P("x^2-7") * P("x^2+2") * P("x^2+11")},
        {5, P("x^2+1") * P("x-7")},
        {2, P("x^2+7") * P("x+3") * P("x-5")},
        {3, P("x^2-7") * P("x-1") * P("x+10")},
    };
    for (const auto& [p, g] : cases) compare_on_roots(o, rng, g, p, 60, 100, g.degree() - 1);
  });

  run(8, "frame inequality for x^4+1 at 2", kLimit8, [](Outcome& o) {
    auto r = factor(P("x^4+1"), 2).at(0);
    const Rational C1 = okutsu_frame(r).Cs.at(0);
    o.require(C1 == Q(1, 4), "C_1");
    long count = 0;
    for (int d = 1; d < 4; ++d) {
      std::vector<long> c(static_cast<std::size_t>(d), -2);
      for (;;) {
        std::vector<Rational> co(c.begin(), c.end());
        co.emplace_back(1);
        QPoly g{co};
        ExtRational v = value_at_root(r, g);
        o.require(v.is_finite() && v.value() / d <= C1, "frame inequality fails for " + to_string(g));
        ++count;
        std::size_t i = 0;
        while (i < c.size() && c[i] == 2) c[i++] = -2;
        if (i == c.size()) break;
        ++c[i];
      }
    }
    o.require(count == 155, "enumeration count");
  });

  run(9, "Okutsu equivalence vs resultant threshold", 0, [](Outcome& o) {
    Rng rng(9);
    const std::vector<std::pair<std::uint64_t, QPoly>> cases{
        {2, P("x^4+1")},         {2, P("x^2+1")},         {2, P("x^3-x^2-2*x-8")}, {3, P("x^6+3*x^3+9")},
        {5, P("x^2+1")},         {2, P("x^2+x+1")},       {3, P("x^4+3*x^2+18")},  {2, P("x^4+2*x^2+4*x+2")},
        {2, P("x^8+4*x^4+16")},  {5, P("x^5+10*x+5")},
    };
    for (const auto& [p, g] : cases) {
      for (const auto& F : factor(g, p)) {
        const long n = F.phi.degree();
        // a perturbation beyond delta0 stays in the class
        const long N = floor(F.delta0).get_si() + 1;
        QPoly G = F.phi + QPoly::constant(p_power(p, N));
        auto rg = factor(G, p);
        o.require(rg.size() == 1, "perturbation is not prime: " + to_string(G));
        if (rg.size() != 1) continue;
        auto above = [&](const QPoly& H) {
          return vp(oracle::sylvester_resultant(F.phi, H), p) > ExtRational(Rational(F.delta0 * n));
        };
        o.require(okutsu_equiv(F, rg[0]), "perturbation not equivalent: " + to_string(G));
        o.require(above(G), "resultant below threshold for " + to_string(G));
        // a prime of the same degree with a different ramification index
        QPoly H;
        if (n == 1) {
          H = F.phi + QPoly{1};
        } else if (F.e == n) {
          H = construct_key_poly(mu0(p), random_irreducible(mu0(p).tower(), 0, static_cast<int>(n), rng, true));
        } else {
          H = QPoly::monomial(Rational(1), static_cast<int>(n)) + QPoly::constant(Rational(static_cast<unsigned long>(p)));
        }
        auto rh = factor(H, p);
        o.require(rh.size() == 1, "comparison is not prime: " + to_string(H));
        if (rh.size() != 1) continue;
        o.require(n == 1 || rh[0].e != F.e, "comparison has the same e");
        bool eq = okutsu_equiv(F, rh[0]);
        o.require(!eq, "different e reported equivalent: " + to_string(H));
        o.require(eq == above(H), "equivalence disagrees with the resultant for " + to_string(H));
      }
    }
  });

  run(10, "byte-identical reruns of factor and verify", 0, [](Outcome& o) {
    auto factor_out = [](int jobs) {
      FactorOptions fo;
      fo.jobs = jobs;
      fo.target_precision = Q(20);
      std::string s;
      for (const auto& [p, g] : std::vector<std::pair<std::uint64_t, QPoly>>{
               {2, P("x^3-x^2-2*x-8")}, {2, P("x^4+1")}, {3, P("x^6+3*x^3+9") * P("x^2+2")}})
        s += factor_json(p, g, factor(g, p, fo)) + "\n";
      return s;
    };
    auto verify_out = [] {
      std::string s;
      for (const auto& t : run_verify(VerifyOptions{5, 42, 100, 8, 1000}))
        s += t.name + "\t" + std::to_string(t.passed) + "\t" + std::to_string(t.failed) + "\n";
      return s;
    };
    std::string a = factor_out(1), b = factor_out(1), c = factor_out(4);
    o.require(a == b, "factor output differs between runs");
    o.require(a == c, "factor output depends on the thread count");
    o.require(verify_out() == verify_out(), "verify output differs between runs");
  });

  std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
