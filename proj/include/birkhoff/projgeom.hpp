#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "birkhoff/coeff.hpp"
#include "birkhoff/multipoly.hpp"

namespace birkhoff {

/// Curvature of the surface: +1 unit sphere, -1 upper hyperboloid sheet.
enum class Curvature : int { Sphere = 1, Hyperbolic = -1 };

inline int sign(Curvature K) { return static_cast<int>(K); }
/// Accepts "sphere", "hyperbolic" (or "hyperboloid"), "+1", "1", "-1".
Curvature parse_curvature(std::string_view text);
std::string to_string(Curvature K);

/// Real vector of the ambient R^3 (points r, velocities v, momenta M, w).
struct AmbientVector {
  std::array<double, 3> c{};

  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }
  friend AmbientVector operator+(const AmbientVector& a, const AmbientVector& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend AmbientVector operator-(const AmbientVector& a, const AmbientVector& b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
  }
  friend AmbientVector operator*(double s, const AmbientVector& a) {
    return {{s * a[0], s * a[1], s * a[2]}};
  }
  friend AmbientVector operator-(const AmbientVector& a) { return {{-a[0], -a[1], -a[2]}}; }
  double dot(const AmbientVector& o) const { return c[0] * o[0] + c[1] * o[1] + c[2] * o[2]; }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const {
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]);
  }
};

/// Euclidean vector product, used for both curvatures.
AmbientVector wedge(const AmbientVector& a, const AmbientVector& b);
/// a1 b1 + a2 b2 + K a3 b3.
double minkowski_form(const AmbientVector& a, const AmbientVector& b, Curvature K);

/// Point of CP^2, stored with its largest-modulus coordinate scaled to 1.
class ProjPoint {
 public:
  using Coords = std::array<std::complex<double>, 3>;

  /// Throws std::invalid_argument for the zero vector.
  explicit ProjPoint(const Coords& coords);
  static ProjPoint real(double x, double y, double z);

  const Coords& coords() const { return c_; }
  const std::complex<double>& operator[](std::size_t i) const { return c_[i]; }
  bool is_real(double tol = 1e-9) const;
  /// All 2x2 minors of the normalized representatives below tol.
  bool projectively_equal(const ProjPoint& o, double tol = 1e-9) const;

 private:
  Coords c_;
};

/// |x1^2 + x2^2 + K x3^2| on the normalized representative.
double absolute_residual(const ProjPoint& P, Curvature K);
/// Membership in the absolute conic.
bool on_absolute(const ProjPoint& P, Curvature K, double tol);

/// Dual of the cone a1 x^2 + a2 y^2 + a3 z^2 = 0 (adjugate of the diagonal form):
/// a2 a3 x^2 + a1 a3 y^2 + a1 a2 z^2. Throws on a zero coefficient.
MultiPoly dual_conic(const Rational& a1, const Rational& a2, const Rational& a3);

/// Dual curve of the quartic cone a1 x^4 + a2 y^4 + a3 z^4 = 0, cleared of
/// radicals: (sum u_i^4 / a_i)^3 - 27 (u1 u2 u3)^4 / (a1 a2 a3). Degree 12.
MultiPoly dual_diagonal_quartic(const Rational& a1, const Rational& a2, const Rational& a3);

/// M = r ^ v for r on the surface and v a unit tangent vector there.
/// Throws std::invalid_argument when the inputs miss the surface, tangency or
/// unit speed by more than `tol`.
AmbientVector dual_point(const AmbientVector& r, const AmbientVector& v, Curvature K,
                         double tol = 1e-10);

/// Tangent vector of the dual curve from the defining polynomial's gradient at M.
///   K = +1: (x2 G3 - x3 G2,  x3 G1 - x1 G3, x1 G2 - x2 G1)
///   K = -1: (x2 G3 + x3 G2, -x3 G1 - x1 G3, x1 G2 - x2 G1)
/// Throws DegenerateInput when the gradient vanishes (singular dual point).
AmbientVector tangent_w(const AmbientVector& gradient, const AmbientVector& M, Curvature K);

/// The same pattern applied symbolically to the gradient of G.
std::array<MultiPoly, 3> tangent_w(const MultiPoly& G, Curvature K);

}  // namespace birkhoff
