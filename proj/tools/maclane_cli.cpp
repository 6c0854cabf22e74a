#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/okutsu.hpp"
#include "maclane/residual.hpp"
#include "maclane/valuation.hpp"
#include "maclane/verify.hpp"

using namespace maclane;
using ojson = nlohmann::ordered_json;

namespace {

struct Args {
  std::uint64_t prime = 0;
  std::string chain_file;
  std::vector<std::string> phis;
  std::vector<std::string> lambdas;
  std::string precision = "0";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string emit_chain;
  std::string key;
  int trials = 100;
  int max_degree = 10;
  long coeff_bound = 1000;
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text << '\n';
}

// chain.json, chain.1.json, chain.2.json, ...
std::string indexed_path(const std::string& path, std::size_t k) {
  if (k == 0) return path;
  std::filesystem::path fp(path);
  std::filesystem::path out = fp.parent_path() / (fp.stem().string() + "." + std::to_string(k) + fp.extension().string());
  return out.string();
}

// The valuation named by --chain, then extended by each --phi/--lambda pair; mu0 otherwise.
Valuation chain_from_args(const Args& a) {
  std::optional<Valuation> mu;
  if (!a.chain_file.empty()) {
    mu = chain_from_json(read_file(a.chain_file));
    if (a.prime != 0 && mu->p() != a.prime) throw InputError("--prime disagrees with the chain file");
  } else {
    if (a.prime == 0) throw InputError("--prime or --chain is required");
    mu = mu0(a.prime);
  }
  if (a.phis.size() != a.lambdas.size()) throw InputError("--phi and --lambda must be given in pairs");
  for (std::size_t i = 0; i < a.phis.size(); ++i) mu = mu->augment(parse_qpoly(a.phis[i]), parse_rational(a.lambdas[i]));
  return *mu;
}

std::uint64_t need_prime(const Args& a) {
  if (a.prime == 0) throw InputError("--prime is required");
  require_prime(a.prime);
  return a.prime;
}

const std::string& single_input(const Args& a, const char* what) {
  if (a.inputs.size() != 1) throw InputError(std::string("expected one ") + what);
  return a.inputs[0];
}

std::string quoted(const std::string& s) { return ojson(s).dump(); }

int cmd_factor(const Args& a) {
  const std::uint64_t p = need_prime(a);
  QPoly g = parse_qpoly(single_input(a, "polynomial"));
  FactorOptions o;
  o.target_precision = parse_rational(a.precision);
  o.jobs = a.jobs;
  auto reps = factor(g, p, o);
  if (!a.emit_chain.empty())
    for (std::size_t k = 0; k < reps.size(); ++k) write_file(indexed_path(a.emit_chain, k), chain_to_json(reps[k].muF));
  std::cout << factor_json(p, g, reps) << '\n';
  return 0;
}

int cmd_valuate(const Args& a) {
  Valuation mu = chain_from_args(a);
  std::cout << quoted(mu(parse_qpoly(single_input(a, "polynomial"))).str()) << '\n';
  return 0;
}

int cmd_newton(const Args& a) {
  Valuation mu = chain_from_args(a);
  QPoly phi = parse_qpoly(a.key), g = parse_qpoly(single_input(a, "polynomial"));
  if (!is_key_poly(mu, phi).key) throw KeyPolyError(to_string(phi) + " is not a key polynomial");
  NewtonPolygon n = newton_polygon(mu, phi, g);
  for (const auto& v : n.vertices()) std::cout << "vertex\t" << v.s << '\t' << to_string(v.q) << '\n';
  for (const auto& s : n.sides()) {
    // residual degree of the side: its length over e_lambda
    Rational scaled = Rational(-s.slope() * mu.e_mu());
    const long e_lam = scaled.get_den().get_si();
    std::cout << "side\t" << to_string(s.slope()) << '\t' << s.length() << '\t' << s.length() / e_lam << '\n';
  }
  return 0;
}

int cmd_residual(const Args& a) {
  Valuation mu = chain_from_args(a);
  QPoly g = parse_qpoly(single_input(a, "polynomial"));
  ResidualIdeal I = residual_ideal(mu, g);
  ojson j;
  j["depth"] = mu.depth();
  j["value"] = mu(g).str();
  j["residual_polynomial"] = residual_polynomial(mu, g).str();
  j["ideal_y_power"] = I.k;
  j["ideal_psi"] = I.psi_part.str();
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_frame(const Args& a) {
  const std::uint64_t p = need_prime(a);
  QPoly g = parse_qpoly(single_input(a, "polynomial"));
  FactorOptions o;
  o.target_precision = parse_rational(a.precision);
  o.jobs = a.jobs;
  ojson out = ojson::array();
  for (const auto& r : factor(g, p, o)) {
    ojson j;
    j["phi"] = to_string(r.phi);
    OkutsuFrame fr = okutsu_frame(r);
    j["frame"] = ojson::array();
    j["C"] = ojson::array();
    for (std::size_t i = 0; i < fr.phis.size(); ++i) {
      j["frame"].push_back(to_string(fr.phis[i]));
      j["C"].push_back(to_string(fr.Cs[i]));
    }
    j["delta0"] = to_string(delta0(r));
    j["intervals"] = ojson::array();
    for (const auto& s : interval_decomposition(r).segments) {
      ojson seg;
      seg["phi"] = to_string(s.phi);
      seg["lo"] = to_string(s.lambda_lo);
      seg["hi"] = s.lambda_hi.str();
      j["intervals"].push_back(seg);
    }
    out.push_back(j);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_equiv(const Args& a) {
  const std::uint64_t p = need_prime(a);
  if (a.inputs.size() != 2) throw InputError("equiv expects two polynomials");
  std::vector<FactorReport> reps;
  for (const auto& s : a.inputs) {
    auto r = factor(parse_qpoly(s), p);
    if (r.size() != 1) throw MathError(s + " is not irreducible over the p-adic integers");
    reps.push_back(r[0]);
  }
  std::cout << (okutsu_equiv(reps[0], reps[1]) ? "true" : "false") << '\n';
  return 0;
}

int cmd_vp(const Args& a) {
  const std::uint64_t p = need_prime(a);
  std::cout << quoted(vp(parse_rational(single_input(a, "rational")), p).str()) << '\n';
  return 0;
}

int cmd_verify(const Args& a) {
  VerifyOptions o;
  o.p = need_prime(a);
  o.seed = a.seed;
  o.trials = a.trials;
  o.max_degree = a.max_degree;
  o.coeff_bound = a.coeff_bound;
  long passed = 0, failed = 0;
  for (const auto& t : run_verify(o)) {
    std::cout << t.name << '\t' << t.passed << '\t' << t.failed << '\n';
    passed += t.passed;
    failed += t.failed;
  }
  std::cout << "total\t" << passed << '\t' << failed << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inductive valuations, Newton polygons and p-adic factorization over Q"};
  app.require_subcommand(1);
  Args a;

  auto add_prime = [&](CLI::App* c) { c->add_option("--prime", a.prime, "prime p"); };
  auto add_chain = [&](CLI::App* c) {
    c->add_option("--chain", a.chain_file, "chain JSON file");
    c->add_option("--phi", a.phis, "key polynomial of an extra augmentation step");
    c->add_option("--lambda", a.lambdas, "slope of an extra augmentation step");
  };
  auto add_factor_opts = [&](CLI::App* c) {
    c->add_option("--precision", a.precision, "target lower bound for v(phi(theta))");
    c->add_option("--jobs", a.jobs, "worker threads over top-level branches")->check(CLI::PositiveNumber);
  };

  auto* f = app.add_subcommand("factor", "p-adic factorization with Okutsu data (JSON)");
  add_prime(f);
  add_factor_opts(f);
  f->add_option("--emit-chain", a.emit_chain, "write the chain of each factor's valuation to FILE, FILE.1, ...");
  f->add_option("poly", a.inputs)->required();

  auto* v = app.add_subcommand("valuate", "value of a polynomial under a chain");
  add_prime(v);
  add_chain(v);
  v->add_option("poly", a.inputs)->required();

  auto* n = app.add_subcommand("newton", "Newton polygon of POLY with respect to the key --phi (TSV)");
  add_prime(n);
  n->add_option("--chain", a.chain_file, "chain JSON file");
  n->add_option("--phi", a.key, "key polynomial")->required();
  n->add_option("poly", a.inputs)->required();

  auto* r = app.add_subcommand("residual", "residual polynomial and residual ideal (JSON)");
  add_prime(r);
  add_chain(r);
  r->add_option("poly", a.inputs)->required();

  auto* fr = app.add_subcommand("frame", "Okutsu frames, constants and intervals per factor (JSON)");
  add_prime(fr);
  add_factor_opts(fr);
  fr->add_option("poly", a.inputs)->required();

  auto* eq = app.add_subcommand("equiv", "Okutsu equivalence of two prime polynomials");
  add_prime(eq);
  eq->add_option("polys", a.inputs)->required()->expected(2);

  auto* vpc = app.add_subcommand("vp", "p-adic valuation of a rational number");
  add_prime(vpc);
  vpc->add_option("rational", a.inputs)->required();

  auto* ver = app.add_subcommand("verify", "randomized property suite (TSV summary)");
  add_prime(ver);
  ver->add_option("--seed", a.seed, "random seed");
  ver->add_option("--trials", a.trials, "number of random trials")->check(CLI::NonNegativeNumber);
  ver->add_option("--max-degree", a.max_degree, "maximal degree of random polynomials")->check(CLI::PositiveNumber);
  ver->add_option("--coeff-bound", a.coeff_bound, "coefficient bound of random polynomials")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*f) return cmd_factor(a);
    if (*v) return cmd_valuate(a);
    if (*n) return cmd_newton(a);
    if (*r) return cmd_residual(a);
    if (*fr) return cmd_frame(a);
    if (*eq) return cmd_equiv(a);
    if (*vpc) return cmd_vp(a);
    if (*ver) return cmd_verify(a);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
