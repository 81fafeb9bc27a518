#include "birkhoff/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "birkhoff/errors.hpp"

namespace birkhoff {
namespace {

void require_plane(const MultiPoly& g, const char* who) {
  if (g.arity() < 2) throw ArityError(std::string(who) + " needs a ring with at least x and y");
}

Coeff p_coeff(const AffineCurveData& data) { return data.p ? Coeff(*data.p) : Coeff::p(); }

MultiPoly finish_p(const MultiPoly& f, const AffineCurveData& data) {
  return data.p ? f.eval_p(*data.p) : f;
}

}  // namespace

MultiPoly h_operator(const MultiPoly& g) {
  require_plane(g, "h_operator");
  const MultiPoly gx = g.diff(0), gy = g.diff(1);
  return gx.diff(0) * gy * gy - Coeff(2L) * gx.diff(1) * gx * gy + gy.diff(1) * gx * gx;
}

MultiPoly lie_u(const MultiPoly& h, const MultiPoly& g) {
  require_plane(g, "lie_u");
  return g.diff(1) * h.diff(0) - g.diff(0) * h.diff(1);
}

MultiPoly third_order_form(const MultiPoly& g) {
  require_plane(g, "third_order_form");
  const MultiPoly gx = g.diff(0), gy = g.diff(1);
  const MultiPoly gxx = gx.diff(0), gxy = gx.diff(1), gyy = gy.diff(1);
  return gxx.diff(0) * gy.pow(3) - Coeff(3L) * gxx.diff(1) * gy * gy * gx +
         Coeff(3L) * gxy.diff(1) * gy * gx * gx - gyy.diff(1) * gx.pow(3);
}

bool third_order_identity_check(const MultiPoly& g) {
  return (lie_u(h_operator(g), g) - third_order_form(g)).is_zero();
}

bool cube_identity_check(const MultiPoly& f, const MultiPoly& r) {
  if (f.is_zero()) throw std::invalid_argument("cube_identity_check: f must be nonzero");
  return remainder(h_operator(f * r) - r.pow(3) * h_operator(f), f).is_zero();
}

MultiPoly metric_factor(const std::vector<std::string>& vars, Curvature K) {
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
  return x * x + y * y + MultiPoly(vars, Coeff(static_cast<long>(sign(K))));
}

MultiPoly terms_expression(const AffineCurveData& data) {
  const MultiPoly& g = data.g;
  require_plane(g, "terms_expression");
  const auto& vars = g.vars();
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
  const MultiPoly C = x * g.diff(1) - y * g.diff(0);
  const Coeff three_two_minus_p = Coeff(6L) - Coeff(3L) * p_coeff(data);
  return metric_factor(vars, data.K) * third_order_form(g) + three_two_minus_p * (h_operator(g) * C);
}

ReflectionSides reflection_sides(const AffineCurveData& data) {
  const MultiPoly& g = data.g;
  if (g.arity() != 2) throw ArityError("reflection_sides: g must be a polynomial in (x, y)");
  if (g.is_zero()) throw std::invalid_argument("reflection_sides: g must be nonzero");
  const auto& vars = g.vars();
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
  const MultiPoly one(vars, Coeff(1L));
  const MultiPoly k(vars, Coeff(static_cast<long>(sign(data.K))));
  const MultiPoly gx = g.diff(0), gy = g.diff(1);
  const MultiPoly C = x * gy - y * gx;
  const MultiPoly A = x * y * gx + (y * y + k) * gy;
  const MultiPoly B = (x * x + k) * gx + x * y * gy;

  auto side = [&](long s) {
    // s = +1 builds the left side, s = -1 the right side.
    const TruncatedSeries denom = TruncatedSeries::linear(one, Coeff(-s) * C);
    const TruncatedSeries inv = denom.reciprocal();
    const TruncatedSeries argX = TruncatedSeries::linear(x, Coeff(s) * A) * inv;
    const TruncatedSeries argY = TruncatedSeries::linear(y, Coeff(-s) * B) * inv;
    TruncatedSeries out = compose_series(g, argX, argY, denom.pow_formal_p());
    for (unsigned i = 0; i <= out.order(); ++i) out[i] = finish_p(out[i], data);
    return out;
  };
  return {side(1), side(-1)};
}

Mu3Report mu3_extract(const AffineCurveData& data) {
  const ReflectionSides sides = reflection_sides(data);
  const TruncatedSeries diff = sides.lhs - sides.rhs;
  const MultiPoly& g = data.g;
  const auto& vars = g.vars();
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);

  Mu3Report rep;
  rep.mu1_coeff = diff[1];
  rep.mu3_coeff = diff[3];
  rep.terms_expr = terms_expression(data);
  rep.even_coefficients_vanish = diff[0].is_zero() && diff[2].is_zero();
  const MultiPoly C = x * g.diff(1) - y * g.diff(0);
  rep.mu1_matches = rep.mu1_coeff == (Coeff(-2L) * p_coeff(data)) * (C * g);

  const MultiPoly r_mu3 = remainder(rep.mu3_coeff, g);
  rep.residual_mod_g = r_mu3;
  const MultiPoly m = metric_factor(vars, data.K);
  MultiPoly mj(vars, Coeff(1L));
  bool any_nonzero = false;
  for (unsigned j = 0; j <= 3; ++j, mj = mj * m) {
    const MultiPoly r_t = remainder(mj * rep.terms_expr, g);
    if (r_t.is_zero()) continue;
    any_nonzero = true;
    // Candidate scalar from the leading term of the reduced multiplier side.
    const auto& lead = r_t.leading_monomial();
    Coeff c;
    if (!r_mu3.coeff(lead).divide_exact(r_t.leading_coeff(), c)) continue;
    const MultiPoly res = r_mu3 - c * r_t;
    if (res.is_zero()) {
      rep.proportionality = Proportionality{c, j};
      rep.residual_mod_g = res;
      return rep;
    }
  }
  rep.both_vanish_mod_g = !any_nonzero && r_mu3.is_zero();
  return rep;
}

std::vector<std::array<double, 2>> real_curve_points(const MultiPoly& g, int count) {
  require_plane(g, "real_curve_points");
  std::vector<std::array<double, 2>> out;
  const int deg = g.degree();
  if (deg <= 0) return out;
  for (int i = 0; i < count; ++i) {
    const double th = 2.0 * std::numbers::pi * (i + 0.5) / count;
    const double c = std::cos(th), s = std::sin(th);
    std::vector<double> poly(deg + 1, 0.0);  // coefficient of r^j
    for (const auto& [mono, cf] : g.terms()) {
      const int a = mono.e[0], b = mono.e[1];
      poly[a + b] += cf.to_double() * std::pow(c, a) * std::pow(s, b);
    }
    int top = deg;
    while (top > 0 && poly[top] == 0.0) --top;
    if (top == 0) continue;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(top, top);
    for (int j = 0; j < top; ++j) comp(0, j) = -poly[top - 1 - j] / poly[top];
    for (int j = 1; j < top; ++j) comp(j, j - 1) = 1.0;
    const Eigen::VectorXcd ev = comp.eigenvalues();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : ev)
      if (z.real() > 0 && std::fabs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z)))
        best = std::min(best, z.real());
    if (!std::isfinite(best)) continue;
    for (int it = 0; it < 8; ++it) {
      double v = 0.0, dv = 0.0;
      for (int j = top; j >= 0; --j) {
        dv = dv * best + v;
        v = v * best + poly[j];
      }
      if (dv == 0.0) break;
      best -= v / dv;
    }
    out.push_back({best * c, best * s});
  }
  return out;
}

ChainReport conservation_chain_check(const AffineCurveData& data, int samples) {
  if (!data.p) throw std::invalid_argument("conservation_chain_check needs a rational p");
  const Rational three_p = 3 * *data.p;
  if (three_p.get_den() != 1 || three_p.get_num() % 2 != 0)
    throw std::invalid_argument("conservation_chain_check: 3p must be an even integer");
  const MultiPoly& g = data.g;
  const auto& vars = g.vars();
  const MultiPoly m = metric_factor(vars, data.K);
  const MultiPoly H = h_operator(g);
  const MultiPoly LuH = lie_u(H, g);
  const MultiPoly Lum = lie_u(m, g);

  ChainReport rep;
  const Rational a_q = (6 - three_p) / 2;
  rep.exponent = static_cast<int>(a_q.get_num().get_si());
  const int a = rep.exponent;
  const MultiPoly e9 = m * LuH + Coeff(Rational(a_q)) * (H * Lum);
  if (a >= 0) {
    // m L_u(H m^a) = m^a e9
    const MultiPoly ma = m.pow(static_cast<unsigned>(a));
    rep.cleared_identity = m * lie_u(H * ma, g) == ma * e9;
  } else {
    // With b = -a: L_u(H m^-b) = (m^b L_u H - H L_u m^b) / m^(2b); clear m^(2b - 1).
    const MultiPoly mb = m.pow(static_cast<unsigned>(-a));
    rep.cleared_identity = m * (mb * LuH - H * lie_u(mb, g)) == mb * e9;
  }

  const MultiPoly Hr = H.eval_p(Rational(0));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, scale = 0.0;
  for (const auto& pt : real_curve_points(g, samples)) {
    const std::array<double, 2> xy = pt;
    const double mv = m.eval(std::span<const double>(xy));
    const double val = Hr.eval(std::span<const double>(xy)) * std::pow(std::fabs(mv), a);
    rep.samples.push_back(val);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
    scale = std::max(scale, std::fabs(val));
  }
  rep.spread = (rep.samples.empty() || scale == 0.0) ? 0.0 : (hi - lo) / scale;
  return rep;
}

}  // namespace birkhoff
