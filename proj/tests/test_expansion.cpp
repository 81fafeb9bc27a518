#include <doctest.h>

#include <cmath>

#include "birkhoff/errors.hpp"
#include "birkhoff/expansion.hpp"
#include "birkhoff/poly_parse.hpp"
#include "birkhoff/random_poly.hpp"

using namespace birkhoff;

namespace {

const std::vector<std::string> XY{"x", "y"};

MultiPoly P2(const char* s) { return parse_poly(s, XY); }

double at(const MultiPoly& f, double x, double y) {
  const std::array<double, 2> v{x, y};
  return f.eval(std::span<const double>(v));
}

// Direct evaluation of both sides of the reflection identity at finite mu,
// with a real exponent p.
double sides_difference(const MultiPoly& g, Curvature K, double p, double x, double y, double mu) {
  const double k = sign(K);
  const double gx = at(g.diff(0), x, y), gy = at(g.diff(1), x, y);
  const double C = x * gy - y * gx;
  const double A = x * y * gx + (y * y + k) * gy;
  const double B = (x * x + k) * gx + x * y * gy;
  auto side = [&](double s) {
    const double den = 1 - s * mu * C;
    return std::pow(den, p) * at(g, (x + s * mu * A) / den, (y - s * mu * B) / den);
  };
  return side(1) - side(-1);
}

}  // namespace

TEST_CASE("h_operator") {
  CHECK(h_operator(P2("x+y")).is_zero());
  CHECK(h_operator(P2("x^2+y^2-1")) == P2("8*x^2+8*y^2"));
  CHECK(h_operator(P2("x*y")) == P2("-2*x*y"));
}

TEST_CASE("lie_u") {
  const MultiPoly g = P2("x^3 - 2*x*y + y^2 - 1/2");
  const MultiPoly m = P2("x^2+y^2+1");
  CHECK(lie_u(m, g) == Coeff(2L) * (P2("x") * g.diff(1) - P2("y") * g.diff(0)));
  CHECK(lie_u(g, g).is_zero());
  CHECK(lie_u(P2("x"), P2("x^2+y^2-1")) == P2("2*y"));
}

TEST_CASE("third order identity") {
  CHECK(third_order_identity_check(P2("x^2+y^2-1")));
  CHECK(third_order_form(P2("x^2+y^2-1")).is_zero());
  CHECK(lie_u(h_operator(P2("x^2+y^2-1")), P2("x^2+y^2-1")).is_zero());
  CHECK(third_order_identity_check(P2("x^3+y^3")));
  RandomPolyGen gen(41);
  for (int i = 0; i < 50; ++i) CHECK(third_order_identity_check(gen.poly(XY, 5, 6)));
}

TEST_CASE("cube identity") {
  CHECK(cube_identity_check(P2("x^2+y^2-1"), P2("1")));
  CHECK(h_operator(P2("x*y")) == P2("-2*x*y"));
  CHECK(cube_identity_check(P2("x"), P2("y")));
  RandomPolyGen gen(43);
  for (int i = 0; i < 50; ++i) CHECK(cube_identity_check(gen.nonconstant(XY, 3, 5), gen.poly(XY, 3, 5)));
  CHECK_THROWS_AS(cube_identity_check(MultiPoly(XY), P2("x")), std::invalid_argument);
  // Off the curve the two sides differ in general.
  const MultiPoly f = P2("x^2+y-1"), r = P2("x+2");
  CHECK_FALSE((h_operator(f * r) - r.pow(3) * h_operator(f)).is_zero());
}

TEST_CASE("terms expression") {
  const AffineCurveData circle{P2("x^2+y^2-1/4"), Curvature::Sphere, Rational(2)};
  CHECK(terms_expression(circle).is_zero());
  const AffineCurveData formal{P2("x^2+y^2-1/4"), Curvature::Sphere, std::nullopt};
  CHECK(terms_expression(formal).is_zero());  // C = 0 for a centred circle
  const AffineCurveData ellipse{P2("x^2+2*y^2-1"), Curvature::Sphere, std::nullopt};
  const MultiPoly t = terms_expression(ellipse);
  CHECK_FALSE(t.is_rational());
  CHECK(t.eval_p(Rational(2)) == P2("x^2+y^2+1") * third_order_form(P2("x^2+2*y^2-1")));
}

TEST_CASE("mu expansion structure on random curves") {
  RandomPolyGen gen(47);
  for (int i = 0; i < 12; ++i) {
    const Curvature K = i % 2 ? Curvature::Hyperbolic : Curvature::Sphere;
    const AffineCurveData d{gen.nonconstant(XY, 2 + i % 2, 4), K, std::nullopt};
    const Mu3Report r = mu3_extract(d);
    CHECK(r.even_coefficients_vanish);
    CHECK(r.mu1_matches);
    CHECK(r.identity_holds());
    if (!r.both_vanish_mod_g) {
      REQUIRE(r.proportionality);
      CHECK(r.proportionality->scalar == Coeff(make_rational(1, 3)));
      CHECK(r.proportionality->metric_power == 2);
    }
  }
}

TEST_CASE("mu3 multiplier agrees with a finite-mu evaluation") {
  // At a point of g = 0, (lhs - rhs)(mu) = mu3 mu^3 + O(mu^5); compare with
  // (1/3) m^2 terms evaluated at that point, independently of the series code.
  struct Case {
    const char* g;
    Curvature K;
    double p;
  };
  for (const Case c : {Case{"x^2+2*y^2-1/2", Curvature::Sphere, 3.0},
                       Case{"x^3+y^2-1/2", Curvature::Sphere, 2.0},
                       Case{"2*x^2+3*y^2-4", Curvature::Hyperbolic, 5.0}}) {
    const MultiPoly g = P2(c.g);
    const AffineCurveData d{g, c.K, std::nullopt};
    const MultiPoly terms = terms_expression(d);
    // Point on g = 0 along the ray of angle 0.4.
    const auto pts = real_curve_points(g, 8);
    REQUIRE_FALSE(pts.empty());
    const double x = pts[1][0], y = pts[1][1];
    const double m = x * x + y * y + sign(c.K);
    const MultiPoly tp = terms.eval_p(Rational(c.p));
    const double expect = m * m * at(tp, x, y) / 3.0;
    // Richardson on D(mu)/mu^3 removes the mu^2 correction.
    const double mu = 1e-3;
    const double q1 = sides_difference(g, c.K, c.p, x, y, mu) / std::pow(mu, 3);
    const double q2 = sides_difference(g, c.K, c.p, x, y, mu / 2) / std::pow(mu / 2, 3);
    const double est = (4 * q2 - q1) / 3;
    CHECK(est == doctest::Approx(expect).epsilon(1e-4).scale(1.0));
    const Mu3Report r = mu3_extract(d);
    REQUIRE(r.proportionality);
    CHECK(r.proportionality->metric_power == 2);
  }
}

TEST_CASE("circle and dual conic reduce to zero at p = 2") {
  for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic}) {
    const AffineCurveData circle{K == Curvature::Sphere ? P2("x^2+y^2-1/4") : P2("x^2+y^2-4"), K, Rational(2)};
    const Mu3Report r = mu3_extract(circle);
    CHECK(r.terms_expr.is_zero());
    CHECK(remainder(r.mu3_coeff, circle.g).is_zero());
    CHECK(r.identity_holds());
    CHECK(r.both_vanish_mod_g);
  }
  const AffineCurveData conic{P2("-6*x^2-3*y^2+2"), Curvature::Sphere, Rational(2)};
  const Mu3Report r = mu3_extract(conic);
  CHECK(remainder(r.mu3_coeff, conic.g).is_zero());
  CHECK(r.identity_holds());
}

TEST_CASE("curvature branches differ only through the metric factor") {
  RandomPolyGen gen(53);
  for (int i = 0; i < 8; ++i) {
    const MultiPoly g = gen.nonconstant(XY, 3, 5);
    const AffineCurveData s{g, Curvature::Sphere, std::nullopt}, h{g, Curvature::Hyperbolic, std::nullopt};
    CHECK(terms_expression(s) - terms_expression(h) == Coeff(2L) * third_order_form(g));
    CHECK(metric_factor(XY, Curvature::Sphere) - metric_factor(XY, Curvature::Hyperbolic) == P2("2"));
    // Swapping (1 + y^2, 1 + x^2) for (y^2 - 1, x^2 - 1) keeps the multiplier.
    const Mu3Report rs = mu3_extract(s), rh = mu3_extract(h);
    CHECK(rs.mu1_coeff == rh.mu1_coeff);
    if (rs.proportionality && rh.proportionality) {
      CHECK(rs.proportionality->scalar == rh.proportionality->scalar);
      CHECK(rs.proportionality->metric_power == rh.proportionality->metric_power);
    }
  }
}

TEST_CASE("reflection sides are mirror images") {
  const AffineCurveData d{P2("x^3 - x*y + 2*y^2 - 1"), Curvature::Hyperbolic, Rational(3)};
  const auto sides = reflection_sides(d);
  CHECK(sides.rhs == sides.lhs.reflect());
  CHECK(sides.lhs[0] == d.g);
  CHECK_THROWS_AS(reflection_sides({MultiPoly(XY), Curvature::Sphere, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(reflection_sides({parse_poly("x+y+z"), Curvature::Sphere, std::nullopt}), ArityError);
}

TEST_CASE("conservation chain") {
  const ChainReport circle = conservation_chain_check({P2("x^2+y^2-1/4"), Curvature::Sphere, Rational(2)});
  CHECK(circle.cleared_identity);
  CHECK(circle.exponent == 0);
  REQUIRE(circle.samples.size() == 100);
  for (double v : circle.samples) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));  // 8 rho^2

  const ChainReport conic = conservation_chain_check({P2("-6*x^2-3*y^2+2"), Curvature::Sphere, Rational(2)});
  CHECK(conic.cleared_identity);
  REQUIRE_FALSE(conic.samples.empty());
  for (double v : conic.samples) CHECK(v == doctest::Approx(-288.0).epsilon(1e-12));
  CHECK(conic.spread < 1e-12);

  RandomPolyGen gen(59);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly g = gen.nonconstant(XY, 3, 5);
    for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic})
      CHECK(conservation_chain_check({g, K, Rational(2)}, 0).cleared_identity);
  }
  // Other exponents: a = 1, -1, -3.
  for (const Rational p : {make_rational(4, 3), make_rational(8, 3), Rational(4)}) {
    const MultiPoly g = gen.nonconstant(XY, 3, 5);
    CHECK(conservation_chain_check({g, Curvature::Sphere, p}, 0).cleared_identity);
    CHECK(conservation_chain_check({g, Curvature::Hyperbolic, p}, 0).cleared_identity);
  }
  CHECK_THROWS_AS(conservation_chain_check({P2("x^2+y^2-1"), Curvature::Sphere, make_rational(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(conservation_chain_check({P2("x^2+y^2-1"), Curvature::Sphere, std::nullopt}),
                  std::invalid_argument);
}

TEST_CASE("real curve sampling") {
  const auto pts = real_curve_points(P2("x^2+y^2-1/4"), 16);
  REQUIRE(pts.size() == 16);
  for (const auto& p : pts) CHECK(std::hypot(p[0], p[1]) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(real_curve_points(P2("x^2+y^2+1"), 16).empty());
}
