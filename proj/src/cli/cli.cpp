#include "birkhoff/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "birkhoff/dynamics.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/expansion.hpp"
#include "birkhoff/poly_parse.hpp"
#include "birkhoff/random_poly.hpp"

namespace birkhoff {

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

struct CheckConfig {
  std::string F, Q = "1", curvature = "sphere";
  unsigned k = 1;
  double absolute_tol = 1e-8;
};

struct VerifyConfig {
  std::string which, g, p, curvature = "both";
  int cases = 50;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct SimulateConfig {
  std::string cone, curvature = "sphere", psi, out = "-";
  int bounces = 1000;
  bool interior_positive = false;
  double start_angle = 0.7, start_offset = 0.0;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int cmd_check(const CheckConfig& cfg, std::ostream& out) {
  ObstructionProblem prob{parse_poly(cfg.F), parse_poly(cfg.Q), cfg.k, parse_curvature(cfg.curvature)};
  const ObstructionReport rep = theorem_main_verdict(prob, {cfg.absolute_tol});
  out << report_json(rep).dump(2) << '\n';
  return is_pass(rep.verdict) ? kExitPass : kExitFailVerdict;
}

struct CaseResult {
  bool pass = false;
  std::string line;
};

using Task = std::function<CaseResult()>;

std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {false, std::string("error: ") + e.what()};
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string terms_count(const MultiPoly& r) { return std::to_string(r.terms().size()); }

std::vector<Curvature> curvatures(const std::string& text) {
  if (text == "both") return {Curvature::Sphere, Curvature::Hyperbolic};
  return {parse_curvature(text)};
}

std::string lambda_text(const Mu3Report& r, Curvature K) {
  if (r.both_vanish_mod_g) return "any (mu3 and terms vanish mod g)";
  if (!r.proportionality) return "none";
  std::string s = r.proportionality->scalar.to_string();
  if (r.proportionality->metric_power > 0) {
    s += "*(" + metric_factor(kXY, K).to_string() + ")";
    if (r.proportionality->metric_power > 1) s += "^" + std::to_string(r.proportionality->metric_power);
  }
  return s;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> kinds{"cube", "hf", "lieu", "third", "mu3", "chain"};
  if (std::find(kinds.begin(), kinds.end(), cfg.which) == kinds.end())
    throw std::invalid_argument("unknown --which '" + cfg.which + "' (cube, hf, lieu, third, mu3, chain)");
  RandomPolyGen gen(cfg.seed);
  std::vector<Task> tasks;
  const std::optional<MultiPoly> fixed_g = cfg.g.empty() ? std::nullopt : std::optional(parse_poly(cfg.g, kXY));
  std::optional<Rational> p;
  if (!cfg.p.empty()) p = parse_rational(cfg.p);
  const int cases = fixed_g ? 1 : cfg.cases;
  const auto Ks = curvatures(cfg.curvature);

  for (int i = 0; i < cases; ++i) {
    const std::string tag = "case " + std::to_string(i);
    if (cfg.which == "cube") {
      const MultiPoly f = fixed_g ? *fixed_g : gen.nonconstant(kXY, 3, 5), r = gen.poly(kXY, 2, 4);
      tasks.push_back([=] {
        const bool ok = cube_identity_check(f, r);
        const std::string res = ok ? "0" : terms_count(remainder(h_operator(f * r) - r.pow(3) * h_operator(f), f));
        return CaseResult{ok, tag + ": residual_terms=" + res + " " + pass_word(ok)};
      });
    } else if (cfg.which == "hf") {
      const MultiPoly F = gen.homogeneous(kXYZ, static_cast<unsigned>(gen.uniform(2, 5)), 6);
      tasks.push_back([=] {
        const bool ok = hf_identity_check(F);
        return CaseResult{ok, tag + ": degree=" + std::to_string(F.degree()) + " " + pass_word(ok)};
      });
    } else if (cfg.which == "third") {
      const MultiPoly g = fixed_g ? *fixed_g : gen.nonconstant(kXY, 5, 6);
      tasks.push_back([=] {
        const bool ok = third_order_identity_check(g);
        const std::string res = ok ? "0" : terms_count(lie_u(h_operator(g), g) - third_order_form(g));
        return CaseResult{ok, tag + ": residual_terms=" + res + " " + pass_word(ok)};
      });
    } else {
      const MultiPoly g = fixed_g ? *fixed_g : gen.nonconstant(kXY, 3, 4);
      for (const Curvature K : Ks) {
        const std::string ktag = tag + " " + to_string(K);
        if (cfg.which == "lieu") {
          tasks.push_back([=] {
            const MultiPoly x = MultiPoly::variable(kXY, 0), y = MultiPoly::variable(kXY, 1);
            const MultiPoly rot = Coeff(2L) * (x * g.diff(1) - y * g.diff(0));
            const bool self = lie_u(g, g).is_zero();
            const bool metric = lie_u(metric_factor(kXY, K), g) == rot;
            return CaseResult{self && metric, ktag + ": L_u g=0 " + pass_word(self) + ", L_u m=2(x g_y - y g_x) " +
                                                  pass_word(metric)};
          });
        } else if (cfg.which == "mu3") {
          tasks.push_back([=] {
            const Mu3Report r = mu3_extract({g, K, p});
            const bool ok = r.even_coefficients_vanish && r.mu1_matches && r.identity_holds();
            return CaseResult{ok, ktag + ": even=" + pass_word(r.even_coefficients_vanish) + " mu1=" +
                                      pass_word(r.mu1_matches) + " lambda=" + lambda_text(r, K) +
                                      " residual_terms=" + terms_count(r.residual_mod_g) + " " + pass_word(ok)};
          });
        } else {
          const Rational pc = p ? *p : Rational(2);
          tasks.push_back([=] {
            const ChainReport r = conservation_chain_check({g, K, pc});
            std::string line = ktag + ": a=" + std::to_string(r.exponent) + " cleared=" + pass_word(r.cleared_identity) +
                                " samples=" + std::to_string(r.samples.size());
            if (!r.samples.empty()) line += " spread=" + fmt(r.spread);
            return CaseResult{r.cleared_identity, line + " " + pass_word(r.cleared_identity)};
          });
        }
      }
    }
  }
  const auto results = run_tasks(tasks, cfg.jobs);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << r.line << '\n';
    passed += r.pass;
  }
  out << "verify " << cfg.which << ": " << passed << "/" << results.size() << " passed\n";
  return passed == results.size() ? kExitPass : kExitFailVerdict;
}

int cmd_simulate(const SimulateConfig& cfg, std::ostream& out, std::ostream& err) {
  const MultiPoly cone = parse_poly(cfg.cone);
  std::optional<MultiPoly> psi;
  if (!cfg.psi.empty()) psi = parse_poly(cfg.psi);
  const Curvature K = parse_curvature(cfg.curvature);
  try {
    const ConeBoundary b(cone, K, !cfg.interior_positive);
    const Orbit o = run_orbit(default_start(b, cfg.start_angle, cfg.start_offset), b, cfg.bounces, psi);
    std::ostringstream summary;
    summary << "bounces " << cfg.bounces;
    if (psi) summary << " max_psi_residual " << fmt(o.max_residual());
    if (cfg.out == "-") {
      write_orbit_csv(out, o);
      err << summary.str() << '\n';
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file " + cfg.out);
      write_orbit_csv(f, o);
      out << summary.str() << '\n';
    }
    return kExitPass;
  } catch (const DegenerateInput& e) {
    // A table that cannot be simulated is a numeric outcome for this command.
    throw NumericFailure(std::string("table cannot be simulated: ") + e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial integrals of billiards on the sphere and the hyperbolic plane", "birkhoff"};
  app.require_subcommand(1);

  CheckConfig cc;
  auto* check = app.add_subcommand("check", "Singular/inflection test of F^k Q and the Hessian divisibility");
  check->add_option("--F", cc.F, "Homogeneous polynomial in x, y, z")->required();
  check->add_option("--Q", cc.Q, "Cofactor Q")->capture_default_str();
  check->add_option("--k", cc.k, "Power k of F")->capture_default_str()->check(CLI::PositiveNumber);
  check->add_option("--curvature", cc.curvature, "sphere or hyperbolic")->capture_default_str();
  check->add_option("--absolute-tol", cc.absolute_tol, "Tolerance for lying on the absolute")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Exact identity sweeps on seeded random inputs");
  verify->add_option("--which", vc.which, "cube, hf, lieu, third, mu3 or chain")->required();
  verify->add_option("--cases", vc.cases, "Number of random cases")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", vc.seed, "Random seed")->capture_default_str();
  verify->add_option("--g", vc.g, "Fixed affine curve g(x, y) instead of random cases");
  verify->add_option("--p", vc.p, "Rational exponent p (mu3: formal when absent; chain: default 2)");
  verify->add_option("--curvature", vc.curvature, "sphere, hyperbolic or both")->capture_default_str();
  verify->add_option("--jobs", vc.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  SimulateConfig sc;
  auto* simulate = app.add_subcommand("simulate", "Billiard orbit inside a cone-cut table");
  simulate->add_option("--cone", sc.cone, "Homogeneous cone polynomial C; the table is {C < 0}")->required();
  simulate->add_option("--curvature", sc.curvature, "sphere or hyperbolic")->capture_default_str();
  simulate->add_option("--bounces", sc.bounces, "Number of bounces")->capture_default_str()->check(CLI::PositiveNumber);
  simulate->add_option("--psi", sc.psi, "Quadratic form monitored along the orbit");
  simulate->add_option("--out", sc.out, "CSV path, '-' for standard output")->capture_default_str();
  simulate->add_flag("--interior-positive", sc.interior_positive, "Take {C > 0} as the table");
  simulate->add_option("--start-angle", sc.start_angle, "Initial heading in the tangent frame")->capture_default_str();
  simulate->add_option("--start-offset", sc.start_offset, "Initial distance from the symmetry point")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*check) return cmd_check(cc, out);
    if (*verify) return cmd_verify(vc, out);
    return cmd_simulate(sc, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace birkhoff
