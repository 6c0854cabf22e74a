#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maclane/errors.hpp"
#include "maclane/newton.hpp"
#include "maclane/okutsu.hpp"
#include "maclane/residual.hpp"
#include "maclane/valuation.hpp"
#include "maclane/verify.hpp"

namespace py = pybind11;
using namespace maclane;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::object ext(const ExtRational& v) {
  if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return fraction(v.value());
}

// Accepts str, int or fractions.Fraction.
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

QPoly to_poly(const std::string& s) { return parse_qpoly(s); }

}  // namespace

PYBIND11_MODULE(_maclane, m) {
  m.doc() = "Inductive valuations, Newton polygons and p-adic factorization over Q";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const MathError& e) {
      py::set_error(math_error, e.what());
    }
  });

  py::class_<Valuation>(m, "Valuation")
      .def_static("gauss", &Valuation::mu0, py::arg("p"))
      .def_static("from_json", &chain_from_json, py::arg("text"))
      .def("augment", [](const Valuation& v, const std::string& phi, const py::object& lam) {
             return v.augment(to_poly(phi), to_rational(lam));
           }, py::arg("phi"), py::arg("lam"))
      .def("truncate", &Valuation::truncate, py::arg("depth"))
      .def("__call__", [](const Valuation& v, const std::string& g) { return ext(v(to_poly(g))); }, py::arg("g"))
      .def("to_json", &chain_to_json)
      .def("equals", [](const Valuation& a, const Valuation& b) { return equals(a, b); })
      .def_property_readonly("p", &Valuation::p)
      .def_property_readonly("depth", &Valuation::depth)
      .def_property_readonly("e", &Valuation::e_mu)
      .def_property_readonly("C", [](const Valuation& v) { return fraction(v.C()); })
      .def_property_readonly("steps", [](const Valuation& v) {
        py::list out;
        for (const auto& s : v.steps()) out.append(py::make_tuple(to_string(s.phi), fraction(s.lambda)));
        return out;
      });

  m.def("newton_polygon", [](const Valuation& mu, const std::string& phi, const std::string& g) {
    py::list out;
    const NewtonPolygon n = newton_polygon(mu, to_poly(phi), to_poly(g));
    for (const auto& pt : n.vertices()) out.append(py::make_tuple(pt.s, fraction(pt.q)));
    return out;
  }, py::arg("mu"), py::arg("phi"), py::arg("g"), "Vertices (s, value) of the polygon.");

  m.def("residual_polynomial", [](const Valuation& mu, const std::string& g) { return residual_polynomial(mu, to_poly(g)).str(); },
        py::arg("mu"), py::arg("g"));
  m.def("is_key_poly", [](const Valuation& mu, const std::string& phi) {
    KeyPolyStatus s = is_key_poly(mu, to_poly(phi));
    return py::dict(py::arg("key") = s.key, py::arg("proper") = s.proper, py::arg("strong") = s.strong);
  }, py::arg("mu"), py::arg("phi"));
  m.def("vp", [](const py::object& q, std::uint64_t p) { return ext(vp(to_rational(q), p)); }, py::arg("q"), py::arg("p"));

  py::class_<FactorReport>(m, "FactorReport")
      .def_property_readonly("phi", [](const FactorReport& r) { return to_string(r.phi); })
      .def_property_readonly("e", [](const FactorReport& r) { return r.e; })
      .def_property_readonly("f", [](const FactorReport& r) { return r.f; })
      .def_property_readonly("depth", [](const FactorReport& r) { return r.depth; })
      .def_property_readonly("delta0", [](const FactorReport& r) { return fraction(r.delta0); })
      .def_property_readonly("psi", [](const FactorReport& r) { return r.psi.str(); })
      .def_property_readonly("certified_value", [](const FactorReport& r) { return ext(r.certified_value); })
      .def_property_readonly("muF", [](const FactorReport& r) { return r.muF; })
      .def_property_readonly("frame", [](const FactorReport& r) {
        py::list out;
        OkutsuFrame fr = okutsu_frame(r);
        for (std::size_t i = 0; i < fr.phis.size(); ++i) out.append(py::make_tuple(to_string(fr.phis[i]), fraction(fr.Cs[i])));
        return out;
      })
      .def("refine", &refine)
      .def("value_at_root", [](const FactorReport& r, const std::string& h) { return ext(value_at_root(r, to_poly(h))); },
           py::arg("h"))
      .def("intervals", [](const FactorReport& r) {
        py::list out;
        const IntervalDescription d = interval_decomposition(r);
        for (const auto& s : d.segments)
          out.append(py::make_tuple(to_string(s.phi), fraction(s.lambda_lo), ext(s.lambda_hi)));
        return out;
      })
      .def("__repr__", [](const FactorReport& r) {
        return "<FactorReport phi=" + to_string(r.phi) + " e=" + std::to_string(r.e) + " f=" + std::to_string(r.f) + ">";
      });

  m.def("factor", [](const std::string& g, std::uint64_t p, const py::object& precision, int jobs) {
    FactorOptions o;
    o.target_precision = to_rational(precision);
    o.jobs = jobs;
    py::gil_scoped_release release;
    return factor(to_poly(g), p, o);
  }, py::arg("g"), py::arg("p"), py::arg("precision") = 0, py::arg("jobs") = 1);
  m.def("factor_json", [](const std::string& g, std::uint64_t p) {
    QPoly q = to_poly(g);
    return factor_json(p, q, factor(q, p));
  }, py::arg("g"), py::arg("p"));
  m.def("okutsu_equiv", &okutsu_equiv, py::arg("a"), py::arg("b"));

  m.def("verify", [](std::uint64_t p, std::uint64_t seed, int trials, int max_degree, long coeff_bound) {
    py::dict out;
    for (const auto& t : run_verify(VerifyOptions{p, seed, trials, max_degree, coeff_bound}))
      out[py::str(t.name)] = py::make_tuple(t.passed, t.failed);
    return out;
  }, py::arg("p"), py::arg("seed") = 1, py::arg("trials") = 100, py::arg("max_degree") = 10, py::arg("coeff_bound") = 1000);
}
