#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birkhoff/coeff.hpp"
#include "birkhoff/multipoly.hpp"
#include "birkhoff/projgeom.hpp"

namespace birkhoff {

/// Determinant of the 3x3 matrix of second partials.
MultiPoly hessian3(const MultiPoly& F);

struct CurvePoint {
  ProjPoint point;
  int multiplicity = 1;
  /// Scale-free residual of the equations the point was computed from.
  double residual = 0.0;
};

/// All common zeros in CP^2 of two homogeneous polynomials in (x, y, z),
/// with intersection multiplicities taken from the squarefree chain of an
/// exact eliminant. A projection centre off both curves is chosen so that
/// no two intersection points share a fibre; points are Newton-polished.
/// Throws DegenerateInput when the curves share a component.
std::vector<CurvePoint> intersect_curves(const MultiPoly& F, const MultiPoly& G);

/// Common zeros of F_x, F_y, F_z. Residual is max |F_i| with F scaled to unit
/// largest coefficient. Throws DegenerateInput for non-reduced input.
std::vector<CurvePoint> singular_points(const MultiPoly& F);

/// Points of V(F) and V(Hess F) other than singular points; empty for d = 2.
/// Throws DegenerateInput when Hess F vanishes identically.
std::vector<CurvePoint> inflection_points(const MultiPoly& F);

/// F = 0 on the absolute-free side of the problem, Q the cofactor, Psi = F^k Q.
struct ObstructionProblem {
  MultiPoly F;
  MultiPoly Q;
  unsigned k = 1;
  Curvature K = Curvature::Sphere;

  /// Throws DegenerateInput unless F is homogeneous of degree >= 2 in
  /// (x, y, z), Q is a nonzero homogeneous polynomial not divisible by F,
  /// both have rational coefficients, k >= 1 and n = k d + deg Q is even.
  void validate() const;
  int d() const { return F.degree(); }
  int n() const { return static_cast<int>(k) * F.degree() + Q.degree(); }
  /// p = n / k.
  Rational p() const;
  /// 3n/2 - 3k.
  int alpha() const;
};

struct ObstructionOptions {
  /// Tolerance for membership in the absolute.
  double absolute_tol = 1e-8;
};

struct HessIdentity {
  /// The scalar c, absent when no scalar makes F divide the difference.
  std::optional<Rational> c;
  /// Exact quotient R when c exists.
  std::optional<MultiPoly> R;
  /// Zero when c exists, otherwise r0 - c_ls r1 with c_ls the exact
  /// least-squares ratio of the two remainders' coefficient vectors.
  MultiPoly residual;
  Rational least_squares_c;
  int alpha = 0;
};

/// Solves Q^3 (Hess F)^k - c (x^2 + y^2 + K z^2)^alpha = F R for c and R.
HessIdentity hess_divisibility(const ObstructionProblem& prob);

enum class Verdict {
  PassDegree2,
  PassSingularAllOnAbsolute,
  FailSmoothHighDegree,
  FailPointOffAbsolute,
};

std::string to_string(Verdict v);
inline bool is_pass(Verdict v) {
  return v == Verdict::PassDegree2 || v == Verdict::PassSingularAllOnAbsolute;
}

struct ReportedPoint {
  ProjPoint point;
  int multiplicity = 1;
  /// Residual against the absolute, |x1^2 + x2^2 + K x3^2|.
  double residual = 0.0;
};

struct ObstructionReport {
  Verdict verdict = Verdict::PassDegree2;
  int d = 0;
  unsigned k = 1;
  int alpha = 0;
  std::vector<ReportedPoint> singular_points;
  std::vector<ReportedPoint> inflection_points;
  /// First point off the absolute (singular points before inflections).
  std::optional<ReportedPoint> offending_point;
  std::optional<HessIdentity> hess_identity;
};

/// Degree-2 curves pass outright; otherwise the curve must have singular
/// points and every singular and inflection point must lie on the absolute.
ObstructionReport theorem_main_verdict(const ObstructionProblem& prob,
                                       const ObstructionOptions& opts = {});

/// z^2 Hess F = (d-1)^2 (d/(d-1) F (F_xx F_yy - F_xy^2) - H(F)), with H taken
/// in x, y only (z a parameter). Exact.
bool hf_identity_check(const MultiPoly& F);

}  // namespace birkhoff
