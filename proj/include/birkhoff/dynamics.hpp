#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "birkhoff/multipoly.hpp"
#include "birkhoff/projgeom.hpp"

namespace birkhoff {

/// Floating-point copy of a rational polynomial in three variables, with its
/// gradient, for the inner loops of the simulator.
class NumericPoly {
 public:
  NumericPoly() = default;
  /// Throws ArityError unless arity 3, std::invalid_argument for p-dependent input.
  explicit NumericPoly(const MultiPoly& f);

  template <class T>
  T operator()(const std::array<T, 3>& x) const {
    T s = 0;
    for (const auto& t : terms_) s += static_cast<T>(t.c) * power(x[0], t.e[0]) * power(x[1], t.e[1]) * power(x[2], t.e[2]);
    return s;
  }
  double operator()(const AmbientVector& r) const { return (*this)(r.c); }
  AmbientVector gradient(const AmbientVector& r) const;
  std::array<long double, 3> gradient(const std::array<long double, 3>& r) const;
  /// Largest coefficient modulus (1 for the zero polynomial).
  double scale() const { return scale_; }

 private:
  struct Term {
    long double c;
    std::array<int, 3> e;
  };
  template <class T>
  static T power(T b, int e) {
    T r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  std::vector<Term> terms_;
  std::vector<NumericPoly> grad_;
  double scale_ = 1.0;
};

/// Position r on the surface and unit tangent velocity v.
/// Invariants: <r,r> = K, <r,v> = 0, <v,v> = 1 in the form diag(1, 1, K);
/// on the hyperboloid r lies on the upper sheet.
struct BilliardState {
  AmbientVector r;
  AmbientVector v;
};

/// Largest violation of the three state invariants.
double state_defect(const BilliardState& s, Curvature K);
/// Throws NumericFailure when state_defect exceeds tol.
void check_state(const BilliardState& s, Curvature K, double tol = 1e-10);
/// Pulls a slightly drifted state back onto the surface (scale r, then
/// orthogonalize and normalize v).
BilliardState reproject(const BilliardState& s, Curvature K);

/// Closed-form geodesic flow for time t.
BilliardState geodesic(const BilliardState& s, double t, Curvature K);

/// Unit tangent frame (e1, e2) at r, built deterministically.
std::array<AmbientVector, 2> tangent_frame(const AmbientVector& r, Curvature K);

/// Table boundary gamma = surface ∩ {C = 0}; the domain is {C < 0}, or {C > 0}
/// when interior_negative is false.
class ConeBoundary {
 public:
  /// Throws DegenerateInput for a non-homogeneous or non-rational C, when no
  /// interior point is found, or when the domain is unbounded along a geodesic.
  ConeBoundary(const MultiPoly& C, Curvature K, bool interior_negative = true,
               std::optional<AmbientVector> interior = std::nullopt);

  const MultiPoly& polynomial() const { return C_; }
  Curvature curvature() const { return K_; }
  /// Signed so that the domain is where value < 0.
  double value(const AmbientVector& r) const { return sign_ * num_(r); }
  long double value(const std::array<long double, 3>& r) const { return sign_ * num_(r); }
  AmbientVector gradient(const AmbientVector& r) const { return sign_ * num_.gradient(r); }
  std::array<long double, 3> gradient(const std::array<long double, 3>& r) const;
  /// Unit outward normal in T_r(surface). Throws DegenerateInput when the
  /// projected gradient vanishes.
  AmbientVector normal(const AmbientVector& r) const;
  /// Unit tangent of gamma at r.
  AmbientVector tangent(const AmbientVector& r) const;
  /// |value| small compared to the gradient.
  bool on_boundary(const AmbientVector& r, double tol = 1e-9) const;

  const AmbientVector& interior_point() const { return interior_; }
  /// Twice the largest exit time over 64 geodesics from the interior point.
  double diameter() const { return diameter_; }
  /// Grid step of the hit scan: diameter / 256.
  double scan_step() const { return diameter_ / 256.0; }
  /// Scan horizon: pi on the sphere, 4 diameter + 1 on the hyperboloid.
  double max_flight() const;

 private:
  MultiPoly C_;
  NumericPoly num_;
  Curvature K_;
  double sign_;
  AmbientVector interior_;
  double diameter_ = 0.0;
};

struct Hit {
  double t = 0.0;
  BilliardState state;
};

/// First boundary crossing of the geodesic. Starting on the boundary, the
/// geodesic must enter the domain; throws NumericFailure when it does not or
/// when no crossing occurs before max_flight().
Hit next_hit(const BilliardState& s, const ConeBoundary& b);

/// v' = v - 2 <v,n> n at a boundary point.
BilliardState reflect(const BilliardState& hit, const ConeBoundary& b);

struct Orbit {
  /// states[0] is the start, states[i] the state right after bounce i.
  std::vector<BilliardState> states;
  std::vector<AmbientVector> momenta;
  std::vector<double> flight_times;
  /// |psi(M_i) - psi(M_0)|; empty without psi.
  std::vector<double> integral_residuals;

  double max_residual() const;
};

/// Requires start strictly inside the domain (DegenerateInput otherwise).
Orbit run_orbit(const BilliardState& start, const ConeBoundary& b, int bounces,
                const std::optional<MultiPoly>& psi = std::nullopt);

/// Starts at the interior point, moved a geodesic distance `offset` along the
/// first frame vector, heading at `angle` in the transported frame.
BilliardState default_start(const ConeBoundary& b, double angle = 0.7, double offset = 0.0);

/// Boundary points hit by `count` geodesics from the interior point, at angles
/// 2 pi (j + offset) / count, each paired with the unit tangent of gamma.
std::vector<BilliardState> boundary_samples(const ConeBoundary& b, int count, double offset = 0.5);

/// Geodesic curvature of gamma at r (positive for a convex domain), from the
/// offset of gamma off its tangent geodesic: central second difference with
/// arc step h, Richardson-extrapolated once.
double geodesic_curvature(const ConeBoundary& b, const AmbientVector& r, double h = 1e-5);

/// For every epsilon, the max over boundary samples of |psi(M - eps w) - psi(M + eps w)|,
/// M = r ^ t on the dual curve, w the unit tangent of {F_dual = 0} at M.
/// Throws std::invalid_argument when psi misses the dual curve by more than 1e-9.
std::vector<double> pm_deviations(const ConeBoundary& b, const MultiPoly& psi, const MultiPoly& F_dual,
                                  std::span<const double> epsilons, int samples = 200);
/// Max of pm_deviations.
double theorem_pm_check(const ConeBoundary& b, const MultiPoly& psi, const MultiPoly& F_dual,
                        std::span<const double> epsilons, int samples = 200);

struct MidpointReport {
  /// max |P- + P+ - 2M|.
  double algebraic = 0.0;
  /// max |normalize(P- + P+) - M|.
  double midpoint = 0.0;
  /// max |<M-,M> - <M,M+>|.
  double equidistance = 0.0;
  /// max |<M±,M±> - 1| on the dual surface.
  double surface = 0.0;

  double max_residual() const { return std::max(midpoint, equidistance); }
};

/// P± = r ^ (v ± eps k n) at boundary samples, projected radially to the dual
/// surface. Throws DegenerateInput where k vanishes.
MidpointReport midpoint_remark_check(const ConeBoundary& b, int samples, double eps);

/// Coefficients of x^2, y^2, z^2, xy, xz, yz.
using QuadraticCoefficients = std::array<double, 6>;
QuadraticCoefficients quadratic_coefficients(const MultiPoly& q);
/// Unit Euclidean norm, largest-modulus entry positive.
QuadraticCoefficients normalized(QuadraticCoefficients q);

struct QuadraticFit {
  QuadraticCoefficients coefficients{};
  /// Singular values of the conservation system, descending.
  std::array<double, 6> singular_values{};
  /// max |q(Gamma_j)| of the fitted form over the dual boundary samples.
  double boundary_residual = 0.0;
};

/// Least-squares conserved quadratic: the two-dimensional null space of
/// q(M_i) - q(M_0) = 0 over the orbit, then the member vanishing on the dual
/// curve (which removes the trivial <M,M> direction).
QuadraticFit fit_conserved_quadratic(const Orbit& orbit, const ConeBoundary& b, int boundary_points = 64);

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// CSV: bounce,r1,r2,r3,v1,v2,v3,M1,M2,M3,psi_residual (%.17g, empty residual without psi).
void write_orbit_csv(std::ostream& out, const Orbit& orbit);

}  // namespace birkhoff
