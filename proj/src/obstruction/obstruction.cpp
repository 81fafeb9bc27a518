#include "birkhoff/obstruction.hpp"

#include "birkhoff/errors.hpp"
#include "birkhoff/expansion.hpp"

namespace birkhoff {

MultiPoly hessian3(const MultiPoly& F) {
  if (F.arity() != 3) throw ArityError("hessian3 expects a polynomial in three variables");
  std::vector<std::vector<MultiPoly>> m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const MultiPoly Fi = F.diff(i);
    for (std::size_t j = 0; j < 3; ++j) m[i].push_back(Fi.diff(j));
  }
  return determinant(std::move(m));
}

void ObstructionProblem::validate() const {
  if (F.arity() != 3 || Q.arity() != 3 || F.vars() != Q.vars())
    throw ArityError("F and Q must be polynomials in the same three variables");
  if (!F.is_rational() || !Q.is_rational())
    throw DegenerateInput("F and Q must have rational coefficients");
  if (F.is_zero() || !F.is_homogeneous() || F.degree() < 2)
    throw DegenerateInput("F must be homogeneous of degree >= 2");
  if (Q.is_zero() || !Q.is_homogeneous()) throw DegenerateInput("Q must be a nonzero homogeneous polynomial");
  if (k < 1) throw DegenerateInput("k must be a positive integer");
  if (remainder(Q, F).is_zero()) throw DegenerateInput("Q must not be divisible by F");
  if (n() % 2 != 0) throw DegenerateInput("n = k d + deg Q must be even, got " + std::to_string(n()));
}

Rational ObstructionProblem::p() const { return make_rational(n(), static_cast<long>(k)); }

int ObstructionProblem::alpha() const { return 3 * n() / 2 - 3 * static_cast<int>(k); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PassDegree2: return "PASS_DEGREE_2";
    case Verdict::PassSingularAllOnAbsolute: return "PASS_SINGULAR_ALL_ON_ABSOLUTE";
    case Verdict::FailSmoothHighDegree: return "FAIL_SMOOTH_HIGH_DEGREE";
    case Verdict::FailPointOffAbsolute: return "FAIL_POINT_OFF_ABSOLUTE";
  }
  return "?";
}

namespace {

Rational inner(const MultiPoly& a, const MultiPoly& b) {
  Rational s = 0;
  for (const auto& [m, c] : a.terms()) s += c.constant() * b.coeff(m).at(0);
  return s;
}

}  // namespace

HessIdentity hess_divisibility(const ObstructionProblem& prob) {
  prob.validate();
  HessIdentity out;
  out.alpha = prob.alpha();
  if (out.alpha < 0) throw DegenerateInput("alpha = 3n/2 - 3k is negative");
  const auto& vars = prob.F.vars();
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1),
                  z = MultiPoly::variable(vars, 2);
  const MultiPoly absolute = x * x + y * y + Coeff(static_cast<long>(sign(prob.K))) * (z * z);
  const MultiPoly A = prob.Q.pow(3) * hessian3(prob.F).pow(prob.k);
  const MultiPoly B = absolute.pow(static_cast<unsigned>(out.alpha));
  const MultiPoly r0 = remainder(A, prob.F), r1 = remainder(B, prob.F);

  if (r1.is_zero()) {
    out.least_squares_c = 0;
    out.residual = r0;
    if (r0.is_zero()) {
      out.c = Rational(0);
      out.R = divide_exact(A, prob.F);
    }
    return out;
  }
  const Rational c_ls = inner(r0, r1) / inner(r1, r1);
  out.least_squares_c = c_ls;
  const Rational c = r0.coeff(r1.leading_monomial()).at(0) / r1.leading_coeff().constant();
  const MultiPoly diff = r0 - Coeff(c) * r1;
  if (!diff.is_zero()) {
    out.residual = r0 - Coeff(c_ls) * r1;
    return out;
  }
  if (c != 0 && !A.is_zero()) {
    const int lhs = 3 * prob.Q.degree() + 3 * static_cast<int>(prob.k) * (prob.d() - 2);
    if (lhs != 2 * out.alpha) throw NumericFailure("degree bookkeeping 3 deg Q + 3k(d-2) = 2 alpha failed");
  }
  out.c = c;
  out.R = divide_exact(A - Coeff(c) * B, prob.F);
  out.residual = MultiPoly(vars);
  return out;
}

ObstructionReport theorem_main_verdict(const ObstructionProblem& prob, const ObstructionOptions& opts) {
  prob.validate();
  ObstructionReport rep;
  rep.d = prob.d();
  rep.k = prob.k;
  rep.alpha = prob.alpha();
  rep.hess_identity = hess_divisibility(prob);
  if (rep.d == 2) {
    rep.verdict = Verdict::PassDegree2;
    return rep;
  }
  auto report = [&](const std::vector<CurvePoint>& pts) {
    std::vector<ReportedPoint> out;
    for (const auto& c : pts) out.push_back({c.point, c.multiplicity, absolute_residual(c.point, prob.K)});
    return out;
  };
  rep.singular_points = report(singular_points(prob.F));
  rep.inflection_points = report(inflection_points(prob.F));

  auto first_off = [&](const std::vector<ReportedPoint>& pts) -> std::optional<ReportedPoint> {
    for (const auto& p : pts)
      if (!on_absolute(p.point, prob.K, opts.absolute_tol)) return p;
    return std::nullopt;
  };
  if (rep.singular_points.empty()) {
    rep.verdict = Verdict::FailSmoothHighDegree;
    rep.offending_point = first_off(rep.inflection_points);
    return rep;
  }
  rep.offending_point = first_off(rep.singular_points);
  if (!rep.offending_point) rep.offending_point = first_off(rep.inflection_points);
  rep.verdict = rep.offending_point ? Verdict::FailPointOffAbsolute : Verdict::PassSingularAllOnAbsolute;
  return rep;
}

bool hf_identity_check(const MultiPoly& F) {
  if (F.arity() != 3) throw ArityError("hf_identity_check expects a polynomial in (x, y, z)");
  if (F.is_zero() || !F.is_homogeneous() || F.degree() < 2)
    throw std::invalid_argument("hf_identity_check needs a homogeneous polynomial of degree >= 2");
  const long d = F.degree();
  const auto& vars = F.vars();
  const MultiPoly z = MultiPoly::variable(vars, 2);
  const MultiPoly Fx = F.diff(0), Fy = F.diff(1);
  const MultiPoly minor = Fx.diff(0) * Fy.diff(1) - Fx.diff(1) * Fx.diff(1);
  const MultiPoly lhs = z * z * hessian3(F);
  const MultiPoly rhs = Coeff(Rational((d - 1) * (d - 1))) *
                        (Coeff(make_rational(d, d - 1)) * (F * minor) - h_operator(F));
  return (lhs - rhs).is_zero();
}

}  // namespace birkhoff
