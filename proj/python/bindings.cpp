#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "birkhoff/cli.hpp"
#include "birkhoff/dynamics.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/expansion.hpp"
#include "birkhoff/obstruction.hpp"
#include "birkhoff/poly_parse.hpp"

namespace py = pybind11;
using namespace birkhoff;

namespace {

const std::vector<std::string> kXY{"x", "y"};

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object check(const std::string& F, const std::string& Q, unsigned k, const std::string& curvature) {
  ObstructionProblem prob{parse_poly(F), parse_poly(Q), k, parse_curvature(curvature)};
  return to_python(report_json(theorem_main_verdict(prob)));
}

std::optional<std::string> hess_c(const std::string& F, const std::string& Q, unsigned k, const std::string& curvature) {
  const HessIdentity h = hess_divisibility({parse_poly(F), parse_poly(Q), k, parse_curvature(curvature)});
  if (!h.c) return std::nullopt;
  return to_string(*h.c);
}

py::dict mu3(const std::string& g, const std::string& curvature, const std::optional<std::string>& p) {
  std::optional<Rational> pv;
  if (p) pv = parse_rational(*p);
  const Mu3Report r = mu3_extract({parse_poly(g, kXY), parse_curvature(curvature), pv});
  py::dict d;
  d["even_coefficients_vanish"] = r.even_coefficients_vanish;
  d["mu1_matches"] = r.mu1_matches;
  d["identity_holds"] = r.identity_holds();
  d["both_vanish_mod_g"] = r.both_vanish_mod_g;
  d["scalar"] = r.proportionality ? py::object(py::str(r.proportionality->scalar.to_string())) : py::object(py::none());
  d["metric_power"] = r.proportionality ? py::object(py::int_(r.proportionality->metric_power)) : py::object(py::none());
  return d;
}

py::dict simulate(const std::string& cone, const std::string& curvature, int bounces, const std::optional<std::string>& psi,
                  double start_angle, double start_offset) {
  const ConeBoundary b(parse_poly(cone), parse_curvature(curvature));
  std::optional<MultiPoly> P;
  if (psi) P = parse_poly(*psi);
  const Orbit o = run_orbit(default_start(b, start_angle, start_offset), b, bounces, P);
  py::list momenta;
  for (const auto& M : o.momenta) momenta.append(py::make_tuple(M[0], M[1], M[2]));
  std::ostringstream csv;
  write_orbit_csv(csv, o);
  py::dict d;
  d["momenta"] = momenta;
  d["flight_times"] = o.flight_times;
  d["integral_residuals"] = o.integral_residuals;
  d["max_residual"] = o.max_residual();
  d["csv"] = csv.str();
  return d;
}

double curvature_at(const std::string& cone, const std::string& curvature, std::array<double, 3> r) {
  return geodesic_curvature(ConeBoundary(parse_poly(cone), parse_curvature(curvature)), AmbientVector{r});
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"birkhoff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(birkhoff, m) {
  m.doc() = "Polynomial integrals of billiards on the sphere and the hyperbolic plane";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
  py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_RuntimeError);

  m.def("parse_poly", [](const std::string& text) { return parse_poly(text).to_string(); }, py::arg("text"),
        "Parse a polynomial in x, y, z and return its canonical text.");
  m.def("hessian", [](const std::string& F) { return hessian3(parse_poly(F)).to_string(); }, py::arg("F"));
  m.def("check", &check, py::arg("F"), py::arg("Q") = "1", py::arg("k") = 1u, py::arg("curvature") = "sphere",
        "Obstruction report as a dict (same schema as `birkhoff check`).");
  m.def("hess_c", &hess_c, py::arg("F"), py::arg("Q") = "1", py::arg("k") = 1u, py::arg("curvature") = "sphere",
        "The scalar c of the Hessian divisibility identity, or None.");
  m.def("third_order_identity_check", [](const std::string& g) { return third_order_identity_check(parse_poly(g, kXY)); },
        py::arg("g"));
  m.def("cube_identity_check",
        [](const std::string& f, const std::string& r) { return cube_identity_check(parse_poly(f, kXY), parse_poly(r, kXY)); },
        py::arg("f"), py::arg("r"));
  m.def("hf_identity_check", [](const std::string& F) { return hf_identity_check(parse_poly(F)); }, py::arg("F"));
  m.def("mu3", &mu3, py::arg("g"), py::arg("curvature") = "sphere", py::arg("p") = std::nullopt);
  m.def("simulate", &simulate, py::arg("cone"), py::arg("curvature") = "sphere", py::arg("bounces") = 100,
        py::arg("psi") = std::nullopt, py::arg("start_angle") = 0.7, py::arg("start_offset") = 0.0);
  m.def("geodesic_curvature", &curvature_at, py::arg("cone"), py::arg("curvature"), py::arg("r"));
  m.def("cli", &cli, py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}
