#include "birkhoff/projgeom.hpp"

#include <algorithm>
#include <stdexcept>

#include "birkhoff/errors.hpp"

namespace birkhoff {

Curvature parse_curvature(std::string_view text) {
  if (text == "sphere" || text == "+1" || text == "1") return Curvature::Sphere;
  if (text == "hyperbolic" || text == "hyperboloid" || text == "-1") return Curvature::Hyperbolic;
  throw std::invalid_argument("unknown curvature '" + std::string(text) + "'");
}

std::string to_string(Curvature K) { return K == Curvature::Sphere ? "sphere" : "hyperbolic"; }

AmbientVector wedge(const AmbientVector& a, const AmbientVector& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

double minkowski_form(const AmbientVector& a, const AmbientVector& b, Curvature K) {
  return a[0] * b[0] + a[1] * b[1] + sign(K) * a[2] * b[2];
}

ProjPoint::ProjPoint(const Coords& coords) {
  double best = 0.0;
  for (const auto& v : coords) best = std::max(best, std::abs(v));
  if (best == 0.0) throw std::invalid_argument("the zero vector is not a projective point");
  // First coordinate attaining the maximum (up to rounding) becomes 1.
  std::size_t pivot = 0;
  while (std::abs(coords[pivot]) < best * (1.0 - 1e-12)) ++pivot;
  const std::complex<double> s = coords[pivot];
  for (std::size_t i = 0; i < 3; ++i) c_[i] = coords[i] / s;
  c_[pivot] = 1.0;
}

ProjPoint ProjPoint::real(double x, double y, double z) { return ProjPoint(Coords{x, y, z}); }

bool ProjPoint::is_real(double tol) const {
  return std::all_of(c_.begin(), c_.end(), [&](const auto& v) { return std::fabs(v.imag()) <= tol; });
}

bool ProjPoint::projectively_equal(const ProjPoint& o, double tol) const {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(c_[i] * o.c_[j] - c_[j] * o.c_[i]) > tol) return false;
  return true;
}

double absolute_residual(const ProjPoint& P, Curvature K) {
  return std::abs(P[0] * P[0] + P[1] * P[1] + static_cast<double>(sign(K)) * P[2] * P[2]);
}

bool on_absolute(const ProjPoint& P, Curvature K, double tol) { return absolute_residual(P, K) < tol; }

MultiPoly dual_conic(const Rational& a1, const Rational& a2, const Rational& a3) {
  if (a1 == 0 || a2 == 0 || a3 == 0) throw std::invalid_argument("dual_conic needs nonzero coefficients");
  const std::vector<std::string> vars{"x", "y", "z"};
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1),
                  z = MultiPoly::variable(vars, 2);
  return x * x * Coeff(a2 * a3) + y * y * Coeff(a1 * a3) + z * z * Coeff(a1 * a2);
}

MultiPoly dual_diagonal_quartic(const Rational& a1, const Rational& a2, const Rational& a3) {
  if (a1 == 0 || a2 == 0 || a3 == 0)
    throw std::invalid_argument("dual_diagonal_quartic needs nonzero coefficients");
  const std::vector<std::string> vars{"x", "y", "z"};
  const MultiPoly x4 = MultiPoly::variable(vars, 0).pow(4), y4 = MultiPoly::variable(vars, 1).pow(4),
                  z4 = MultiPoly::variable(vars, 2).pow(4);
  const MultiPoly s = x4 * Coeff(Rational(1 / a1)) + y4 * Coeff(Rational(1 / a2)) + z4 * Coeff(Rational(1 / a3));
  return s.pow(3) - x4 * y4 * z4 * Coeff(Rational(27 / (a1 * a2 * a3)));
}

AmbientVector dual_point(const AmbientVector& r, const AmbientVector& v, Curvature K, double tol) {
  const double k = sign(K);
  if (std::fabs(minkowski_form(r, r, K) - k) > tol || (K == Curvature::Hyperbolic && r[2] <= 0))
    throw std::invalid_argument("dual_point: r is not on the surface");
  if (std::fabs(minkowski_form(r, v, K)) > tol)
    throw std::invalid_argument("dual_point: v is not tangent at r");
  if (std::fabs(minkowski_form(v, v, K) - 1.0) > tol)
    throw std::invalid_argument("dual_point: v is not a unit vector");
  return wedge(r, v);
}

AmbientVector tangent_w(const AmbientVector& G, const AmbientVector& M, Curvature K) {
  if (G.norm() == 0.0) throw DegenerateInput("vanishing gradient: singular point of the dual curve");
  if (K == Curvature::Sphere)
    return {{M[1] * G[2] - M[2] * G[1], M[2] * G[0] - M[0] * G[2], M[0] * G[1] - M[1] * G[0]}};
  return {{M[1] * G[2] + M[2] * G[1], -M[2] * G[0] - M[0] * G[2], M[0] * G[1] - M[1] * G[0]}};
}

std::array<MultiPoly, 3> tangent_w(const MultiPoly& G, Curvature K) {
  if (G.arity() != 3) throw ArityError("tangent_w expects a polynomial in three variables");
  const auto& vars = G.vars();
  const MultiPoly x1 = MultiPoly::variable(vars, 0), x2 = MultiPoly::variable(vars, 1),
                  x3 = MultiPoly::variable(vars, 2);
  const MultiPoly G1 = G.diff(0), G2 = G.diff(1), G3 = G.diff(2);
  if (K == Curvature::Sphere) return {x2 * G3 - x3 * G2, x3 * G1 - x1 * G3, x1 * G2 - x2 * G1};
  return {x2 * G3 + x3 * G2, -(x3 * G1) - x1 * G3, x1 * G2 - x2 * G1};
}

}  // namespace birkhoff
