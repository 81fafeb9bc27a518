#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "birkhoff/coeff.hpp"
#include "birkhoff/multipoly.hpp"
#include "birkhoff/projgeom.hpp"
#include "birkhoff/series.hpp"

namespace birkhoff {

/// g_xx g_y^2 - 2 g_xy g_x g_y + g_yy g_x^2, derivatives in the first two ring
/// variables (any further variable is a parameter).
MultiPoly h_operator(const MultiPoly& g);

/// Derivative along u = g_y d/dx - g_x d/dy: g_y h_x - g_x h_y.
MultiPoly lie_u(const MultiPoly& h, const MultiPoly& g);

/// g_xxx g_y^3 - 3 g_xxy g_y^2 g_x + 3 g_xyy g_y g_x^2 - g_yyy g_x^3.
MultiPoly third_order_form(const MultiPoly& g);

/// lie_u(h_operator(g), g) == third_order_form(g), exactly.
bool third_order_identity_check(const MultiPoly& g);

/// remainder(H(f r) - r^3 H(f), f) == 0. Throws std::invalid_argument for f = 0.
bool cube_identity_check(const MultiPoly& f, const MultiPoly& r);

/// Affine curve data in (x, y). An absent p means p stays formal.
struct AffineCurveData {
  MultiPoly g{std::vector<std::string>{"x", "y"}};
  Curvature K = Curvature::Sphere;
  std::optional<Rational> p;
};

/// x^2 + y^2 + K in the ring of g.
MultiPoly metric_factor(const std::vector<std::string>& vars, Curvature K);

/// m (third order form) + 3 (2 - p) H(g) (x g_y - y g_x), m the metric factor.
MultiPoly terms_expression(const AffineCurveData& data);

/// Both sides of the reflection identity as series in mu (order 3):
///   lhs = (1 - mu C)^p g((x + mu A)/(1 - mu C), (y - mu B)/(1 - mu C)),
///   rhs = the same with mu -> -mu,
/// where C = x g_y - y g_x and, for K = +1, A = xy g_x + (1 + y^2) g_y,
/// B = (1 + x^2) g_x + xy g_y; for K = -1, (1 + y^2) -> (y^2 - 1) and
/// (1 + x^2) -> (x^2 - 1).
struct ReflectionSides {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};
ReflectionSides reflection_sides(const AffineCurveData& data);

/// mu3 = lambda * terms (mod g) with lambda = scalar * m^metric_power.
struct Proportionality {
  Coeff scalar;
  unsigned metric_power = 0;
};

struct Mu3Report {
  MultiPoly mu1_coeff;
  MultiPoly mu3_coeff;
  MultiPoly terms_expr;
  /// Absent when no multiplier was found, or when both sides vanish mod g
  /// (then every multiplier works; see `both_vanish_mod_g`).
  std::optional<Proportionality> proportionality;
  MultiPoly residual_mod_g;
  bool even_coefficients_vanish = false;
  /// mu1_coeff == -2 p (x g_y - y g_x) g.
  bool mu1_matches = false;
  bool both_vanish_mod_g = false;

  /// The reduced mu^3 identity holds (residual zero).
  bool identity_holds() const { return residual_mod_g.is_zero(); }
};

/// Expands both sides, extracts the mu^1 and mu^3 coefficients of lhs - rhs
/// and searches lambda = c m^j (j = 0..3, c in Q[p]) with
/// remainder(mu3 - lambda terms, g) = 0.
Mu3Report mu3_extract(const AffineCurveData& data);

struct ChainReport {
  /// L_u(H m^a) = m^(a-1) (m L_u H + a H L_u m), a = (6 - 3p)/2, after
  /// clearing the common power of m.
  bool cleared_identity = false;
  /// Exponent a (integral by precondition).
  int exponent = 0;
  /// Values of H(g) m^a at the sampled real points of {g = 0}.
  std::vector<double> samples;
  /// (max - min) / max |value| over the samples; 0 when no points were found.
  double spread = 0.0;
};

/// Requires a rational p with 3p even. Throws std::invalid_argument otherwise.
/// `samples` real points of {g = 0} are located on rays from the origin.
ChainReport conservation_chain_check(const AffineCurveData& data, int samples = 100);

/// Up to `count` real points of {g = 0}: on each of `count` equally spaced rays
/// from the origin, the nearest positive root of g along the ray.
std::vector<std::array<double, 2>> real_curve_points(const MultiPoly& g, int count);

}  // namespace birkhoff
