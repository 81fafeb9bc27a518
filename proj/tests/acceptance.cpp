// Acceptance suite: one PASS/FAIL line per criterion; exit status = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "birkhoff/cli.hpp"
#include "birkhoff/dynamics.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/expansion.hpp"
#include "birkhoff/obstruction.hpp"
#include "birkhoff/poly_parse.hpp"
#include "birkhoff/random_poly.hpp"

using namespace birkhoff;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome exact_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  RandomPolyGen gen(0);
  int third = 0, cube = 0, hf = 0;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    third += third_order_identity_check(gen.nonconstant(XY, 5, 6));
    const MultiPoly f = gen.nonconstant(XY, 3, 5), r = gen.poly(XY, 2, 4);
    cube += cube_identity_check(f, r);
    hf += hf_identity_check(gen.homogeneous(XYZ, static_cast<unsigned>(gen.uniform(2, 5)), 6));
  }
  const double t = seconds_since(t0);
  return {third == n && cube == n && hf == n && t < 60,
          "third " + std::to_string(third) + "/50, cube " + std::to_string(cube) + "/50, hf " + std::to_string(hf) +
              "/50 in " + num(t) + " s"};
}

Outcome mu_expansion() {
  RandomPolyGen gen(1);
  int ok = 0, total = 0;
  for (int i = 0; i < 10; ++i) {
    const MultiPoly g = gen.nonconstant(XY, 3, 4);
    for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic}) {
      const Mu3Report r = mu3_extract({g, K, std::nullopt});
      ok += r.even_coefficients_vanish && r.mu1_matches;
      ++total;
    }
  }
  bool circle = true;
  for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic}) {
    const AffineCurveData d{parse_poly("x^2+y^2-1/4", XY), K, Rational(2)};
    const Mu3Report r = mu3_extract(d);
    circle = circle && r.even_coefficients_vanish && r.mu1_matches && r.terms_expr.is_zero() &&
             remainder(r.mu3_coeff, d.g).is_zero();
  }
  return {ok == total && circle, "parity and mu^1 on " + std::to_string(ok) + "/" + std::to_string(total) +
                                     " random cases; circle p=2 mu^3 = 0 mod g in both branches: " +
                                     (circle ? "yes" : "no")};
}

Outcome hessian_pipeline() {
  const auto fermat = inflection_points(parse_poly("x^3+y^3+z^3"));
  int count = 0, real = 0;
  double worst = 0;
  for (const auto& p : fermat) {
    count += p.multiplicity;
    real += p.point.is_real();
    worst = std::max(worst, p.residual);
  }
  const MultiPoly cusp = parse_poly("y^2*z-x^3");
  const auto sing = singular_points(cusp);
  const auto infl = inflection_points(cusp);
  for (const auto& p : sing) worst = std::max(worst, p.residual);
  for (const auto& p : infl) worst = std::max(worst, p.residual);
  const bool cusp_ok = sing.size() == 1 && sing[0].point.projectively_equal(ProjPoint::real(0, 0, 1)) &&
                       infl.size() == 1 && infl[0].point.projectively_equal(ProjPoint::real(0, 1, 0));
  const auto conic = theorem_main_verdict({parse_poly("6*x^2+3*y^2+2*z^2"), parse_poly("1"), 1, Curvature::Sphere});
  const bool conic_ok = conic.verdict == Verdict::PassDegree2;
  return {count == 9 && real == 3 && cusp_ok && conic_ok && worst < 1e-8,
          "Fermat flexes " + std::to_string(count) + " (" + std::to_string(real) + " real), cusp " +
              (cusp_ok ? "ok" : "wrong") + ", conic " + to_string(conic.verdict) + ", max residual " + num(worst)};
}

Outcome divisibility() {
  const auto conic = hess_divisibility({parse_poly("6*x^2+3*y^2+2*z^2"), parse_poly("1"), 1, Curvature::Sphere});
  const bool conic_ok = conic.c && *conic.c == 288 && conic.R && conic.R->is_zero();
  const auto fermat = hess_divisibility({parse_poly("x^3+y^3+z^3"), parse_poly("1"), 2, Curvature::Sphere});
  const bool fermat_ok = !fermat.c && !fermat.residual.is_zero();
  return {conic_ok && fermat_ok, std::string("dual conic c = ") + (conic.c ? to_string(*conic.c) : "NONE") +
                                     (conic.R && conic.R->is_zero() ? ", R = 0" : ", R != 0") + "; Fermat k=2 c = " +
                                     (fermat.c ? to_string(*fermat.c) : "NONE")};
}

Outcome pm_numeric() {
  std::string detail;
  bool literal = true;
  try {
    ConeBoundary(parse_poly("x^2+2*y^2+3*z^2"), Curvature::Sphere);
  } catch (const DegenerateInput&) {
    literal = false;
    detail = "(1,2,3) table is empty on the real sphere; ";
  }
  const ConeBoundary b(parse_poly("x^2+2*y^2-3*z^2"), Curvature::Sphere);
  const MultiPoly psi = dual_conic(1, 2, -3);
  const std::vector<double> eps{0.1, 0.01};
  const double dev = theorem_pm_check(b, psi, psi, eps, 200);
  const ConeBoundary quartic(parse_poly("x^4+2*y^4-z^4"), Curvature::Sphere);
  const MultiPoly dual = dual_diagonal_quartic(1, 2, -1);
  const std::vector<double> qe{0.02, 0.01, 0.005, 0.0025};
  const double slope = loglog_slope(qe, pm_deviations(quartic, dual, dual, qe, 200));
  detail += "(1,2,-3) deviation " + num(dev) + ", quartic slope " + std::to_string(slope);
  return {literal && dev < 1e-10 && std::fabs(slope - 3) <= 0.2, detail};
}

Outcome conservation() {
  const auto t0 = std::chrono::steady_clock::now();
  const ConeBoundary cap(parse_poly("x^2+y^2-z^2"), Curvature::Sphere);
  const Orbit c = run_orbit(default_start(cap, 0.7, 0.3), cap, 10000, parse_poly("z"));
  const double t_cap = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const ConeBoundary conic(parse_poly("x^2+2*y^2-3*z^2"), Curvature::Sphere);
  const MultiPoly psi = dual_conic(1, 2, -3);
  const Orbit o = run_orbit(default_start(conic), conic, 1000, psi);
  const QuadraticFit fit = fit_conserved_quadratic(o, conic);
  const double t_conic = seconds_since(t1);
  const auto expect = normalized(quadratic_coefficients(psi));
  double fit_err = 0;
  for (int i = 0; i < 6; ++i) fit_err = std::max(fit_err, std::fabs(fit.coefficients[i] - expect[i]));
  return {c.max_residual() < 1e-9 && o.max_residual() < 1e-8 && fit_err < 1e-6 && t_cap < 30 && t_conic < 30,
          "cap M3 drift " + num(c.max_residual()) + " (10^4 bounces, " + num(t_cap) + " s), conic drift " +
              num(o.max_residual()) + " (10^3 bounces), fit error " + num(fit_err) + " (" + num(t_conic) + " s)"};
}

Outcome midpoint() {
  double alg = 0, res = 0, surf = 0;
  for (const auto& [C, K] : {std::pair{"x^2+y^2-z^2", Curvature::Sphere}, std::pair{"x^2+2*y^2-3*z^2", Curvature::Sphere},
                            std::pair{"x^2+y^2-1/2*z^2", Curvature::Hyperbolic},
                            std::pair{"x^2+2*y^2-1/2*z^2", Curvature::Hyperbolic}}) {
    const MidpointReport r = midpoint_remark_check(ConeBoundary(parse_poly(C), K), 100, 1e-3);
    alg = std::max(alg, r.algebraic);
    res = std::max(res, r.max_residual());
    surf = std::max(surf, r.surface);
  }
  return {alg < 1e-12 && res < 1e-9 && surf < 1e-9,
          "algebraic " + num(alg) + ", equidistance/midpoint " + num(res) + ", dual surface " + num(surf)};
}

std::string run(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"birkhoff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + "\x1f" + err.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> configs{
      {"check", "--F", "x^3+y^3+z^3", "--k", "2"},
      {"verify", "--which", "mu3", "--cases", "4", "--seed", "0", "--jobs", "3"},
      {"verify", "--which", "cube", "--cases", "20", "--seed", "5"},
      {"simulate", "--cone", "x^2+2*y^2-3*z^2", "--bounces", "300", "--psi", "-6*x^2-3*y^2+2*z^2"},
  };
  int same = 0;
  for (const auto& cfg : configs) {
    int c1 = 0, c2 = 0;
    const std::string a = run(cfg, c1), b = run(cfg, c2);
    same += a == b && c1 == c2;
  }
  int c = 0;
  const bool jobs = run({"verify", "--which", "mu3", "--cases", "4", "--jobs", "1"}, c) ==
                    run({"verify", "--which", "mu3", "--cases", "4", "--jobs", "4"}, c);
  return {same == static_cast<int>(configs.size()) && jobs,
          std::to_string(same) + "/" + std::to_string(configs.size()) + " configs byte-identical; job count " +
              (jobs ? "does not change output" : "changes output")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact identity suite", exact_identities},
      {"mu-expansion fidelity", mu_expansion},
      {"Hessian pipeline on canonical curves", hessian_pipeline},
      {"Hessian divisibility", divisibility},
      {"plus/minus symmetry on the dual curve", pm_numeric},
      {"billiard conservation", conservation},
      {"midpoint construction", midpoint},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  return failures;
}
