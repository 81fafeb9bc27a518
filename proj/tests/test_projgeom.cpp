#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "birkhoff/errors.hpp"
#include "birkhoff/poly_parse.hpp"
#include "birkhoff/projgeom.hpp"
#include "birkhoff/random_poly.hpp"

using namespace birkhoff;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

AmbientVector V(double a, double b, double c) { return {{a, b, c}}; }

double dist(const AmbientVector& a, const AmbientVector& b) { return (a - b).norm(); }

// Random point on the surface with a random unit tangent, built directly from
// the closed-form charts (independent of dual_point).
std::pair<AmbientVector, AmbientVector> random_state(std::mt19937_64& rng, Curvature K) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double phi = std::numbers::pi * U(rng), psi = std::numbers::pi * U(rng);
  if (K == Curvature::Sphere) {
    const double th = std::acos(U(rng));
    const AmbientVector r = V(std::sin(th) * std::cos(phi), std::sin(th) * std::sin(phi), std::cos(th));
    const AmbientVector e1 = V(std::cos(th) * std::cos(phi), std::cos(th) * std::sin(phi), -std::sin(th));
    const AmbientVector e2 = V(-std::sin(phi), std::cos(phi), 0.0);
    return {r, std::cos(psi) * e1 + std::sin(psi) * e2};
  }
  const double rho = 1.5 * (U(rng) + 1.0);
  const AmbientVector r = V(std::sinh(rho) * std::cos(phi), std::sinh(rho) * std::sin(phi), std::cosh(rho));
  const AmbientVector e1 = V(std::cosh(rho) * std::cos(phi), std::cosh(rho) * std::sin(phi), std::sinh(rho));
  const AmbientVector e2 = V(-std::sin(phi), std::cos(phi), 0.0);
  return {r, std::cos(psi) * e1 + std::sin(psi) * e2};
}

}  // namespace

TEST_CASE("wedge") {
  CHECK(dist(wedge(V(1, 0, 0), V(0, 1, 0)), V(0, 0, 1)) == 0.0);
  CHECK(wedge(V(2, -1, 3), V(2, -1, 3)).norm() == 0.0);
  CHECK(dist(wedge(V(1, 0, 0), V(0, 1, 1)), V(0, -1, 1)) == 0.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const AmbientVector a = V(U(rng), U(rng), U(rng)), b = V(U(rng), U(rng), U(rng));
    CHECK(dist(wedge(a, b), -wedge(b, a)) == 0.0);
    CHECK(std::fabs(a.dot(wedge(a, b))) <= 1e-12);
  }
}

TEST_CASE("minkowski_form") {
  CHECK(minkowski_form(V(0, 0, 1), V(0, 0, 1), Curvature::Sphere) == 1.0);
  CHECK(minkowski_form(V(0, 0, 1), V(0, 0, 1), Curvature::Hyperbolic) == -1.0);
  CHECK(minkowski_form(V(1, 0, 1), V(1, 0, 1), Curvature::Hyperbolic) == 0.0);
}

TEST_CASE("curvature names") {
  CHECK(parse_curvature("sphere") == Curvature::Sphere);
  CHECK(parse_curvature("-1") == Curvature::Hyperbolic);
  CHECK(parse_curvature("hyperbolic") == Curvature::Hyperbolic);
  CHECK_THROWS_AS(parse_curvature("flat"), std::invalid_argument);
}

TEST_CASE("projective points") {
  using C = std::complex<double>;
  const ProjPoint a(ProjPoint::Coords{C(2, 0), C(0, 2), C(0, 0)});
  CHECK(a[0] == C(1, 0));
  CHECK(a[1] == C(0, 1));
  const ProjPoint b(ProjPoint::Coords{C(0, -3), C(3, 0), C(0, 0)});
  CHECK(a.projectively_equal(b));
  CHECK_FALSE(a.projectively_equal(ProjPoint::real(1, 0, 0)));
  CHECK_THROWS_AS(ProjPoint::real(0, 0, 0), std::invalid_argument);

  const ProjPoint q = ProjPoint::real(-4, 1, 2);
  double n2 = 0;
  for (const auto& c : q.coords()) n2 += std::norm(c);
  CHECK(std::sqrt(n2) >= 1.0);
  CHECK(std::sqrt(n2) <= std::sqrt(3.0));
  CHECK(q.is_real());
}

TEST_CASE("on_absolute") {
  using C = std::complex<double>;
  CHECK(on_absolute(ProjPoint(ProjPoint::Coords{C(1), C(0, 1), C(0)}), Curvature::Sphere, 1e-12));
  CHECK(on_absolute(ProjPoint::real(1, 0, 1), Curvature::Hyperbolic, 1e-12));
  const ProjPoint w = ProjPoint::real(1, -1, 0);
  CHECK_FALSE(on_absolute(w, Curvature::Sphere, 1e-8));
  CHECK(absolute_residual(w, Curvature::Sphere) == doctest::Approx(2.0));
  // Scale-free: any representative gives the same residual.
  CHECK(absolute_residual(ProjPoint::real(-7, 7, 0), Curvature::Sphere) == doctest::Approx(2.0));
}

TEST_CASE("dual_conic") {
  CHECK(dual_conic(1, 1, 1) == P("x^2+y^2+z^2"));
  CHECK(dual_conic(1, 1, -1) == P("-x^2-y^2+z^2"));
  CHECK(dual_conic(2, 3, 6) == P("18*x^2+12*y^2+6*z^2"));
  CHECK_THROWS_AS(dual_conic(0, 1, 1), std::invalid_argument);

  // Involution up to the factor a1 a2 a3.
  const Rational a1 = 2, a2 = make_rational(-1, 3), a3 = 5;
  const MultiPoly d = dual_conic(a1, a2, a3);
  const MultiPoly dd = dual_conic(d.coeff(d.leading_monomial()).constant(),
                                  d.coeff(P("y^2").leading_monomial()).constant(),
                                  d.coeff(P("z^2").leading_monomial()).constant());
  const Rational s = a1 * a2 * a3;
  const MultiPoly expect = P("x^2") * Coeff(Rational(a1 * s)) + P("y^2") * Coeff(Rational(a2 * s)) +
                           P("z^2") * Coeff(Rational(a3 * s));
  CHECK(dd == expect);
}

TEST_CASE("dual_conic vanishes on tangent-line duals of the primal conic") {
  // Primal cone 2x^2 + 3y^2 - 6z^2 meets the sphere; walk the intersection
  // with its own unit tangent and push each (r, v) through the wedge.
  const double a1 = 2, a2 = 3, a3 = -6;
  const MultiPoly D = dual_conic(2, 3, -6);
  for (int i = 0; i < 50; ++i) {
    const double t = 2 * std::numbers::pi * (i + 0.25) / 50;
    // Parametrize the cone by (x, y, z) = (cos t / sqrt(a1), sin t / sqrt(a2), 1/sqrt(-a3)).
    const AmbientVector c = V(std::cos(t) / std::sqrt(a1), std::sin(t) / std::sqrt(a2), 1 / std::sqrt(-a3));
    const AmbientVector dc = V(-std::sin(t) / std::sqrt(a1), std::cos(t) / std::sqrt(a2), 0);
    const double nc = c.norm();
    const AmbientVector r = (1 / nc) * c;
    AmbientVector v = dc - r.dot(dc) * r;
    v = (1 / v.norm()) * v;
    const AmbientVector M = dual_point(r, v, Curvature::Sphere);
    const std::array<double, 3> m{M[0], M[1], M[2]};
    CHECK(std::fabs(D.eval(std::span<const double>(m))) < 1e-10);
  }
}

TEST_CASE("dual_point") {
  CHECK(dist(dual_point(V(1, 0, 0), V(0, 1, 0), Curvature::Sphere), V(0, 0, 1)) == 0.0);
  const AmbientVector M = dual_point(V(0, 0, 1), V(1, 0, 0), Curvature::Hyperbolic);
  CHECK(dist(M, V(0, 1, 0)) == 0.0);
  CHECK(minkowski_form(M, M, Curvature::Hyperbolic) == 1.0);

  CHECK_THROWS_AS(dual_point(V(2, 0, 0), V(0, 1, 0), Curvature::Sphere), std::invalid_argument);
  CHECK_THROWS_AS(dual_point(V(1, 0, 0), V(1, 0, 0), Curvature::Sphere), std::invalid_argument);
  CHECK_THROWS_AS(dual_point(V(1, 0, 0), V(0, 2, 0), Curvature::Sphere), std::invalid_argument);
  CHECK_THROWS_AS(dual_point(V(0, 0, -1), V(1, 0, 0), Curvature::Hyperbolic), std::invalid_argument);
}

TEST_CASE("dual points land on the unit sphere and on de Sitter") {
  std::mt19937_64 rng(11);
  for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic}) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto [r, v] = random_state(rng, K);
      const AmbientVector M = dual_point(r, v, K);
      worst = std::max(worst, std::fabs(minkowski_form(M, M, K) - 1.0));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("circle at colatitude theta maps to the circle at height sin theta") {
  const double th = 0.7;
  for (int i = 0; i < 100; ++i) {
    const double phi = 2 * std::numbers::pi * i / 100;
    const AmbientVector r = V(std::sin(th) * std::cos(phi), std::sin(th) * std::sin(phi), std::cos(th));
    const AmbientVector v = V(-std::sin(phi), std::cos(phi), 0);
    const AmbientVector expect = V(-std::cos(th) * std::cos(phi), -std::cos(th) * std::sin(phi), std::sin(th));
    CHECK(dist(dual_point(r, v, Curvature::Sphere), expect) < 1e-14);
  }
}

TEST_CASE("tangent_w follows each curvature's sign pattern") {
  // G = x1 at M = (0, 1, 0): gradient (1, 0, 0).
  const AmbientVector g = V(1, 0, 0), M = V(0, 1, 0);
  CHECK(dist(tangent_w(g, M, Curvature::Sphere), V(0, 0, -1)) == 0.0);
  // K = -1: w2 = -x3 G1 - x1 G3 = 0, w3 = x1 G2 - x2 G1 = -1.
  CHECK(dist(tangent_w(g, M, Curvature::Hyperbolic), V(0, 0, -1)) == 0.0);
  // A point where the branches differ: M = (0, 0, 1), G = x2.
  CHECK(dist(tangent_w(V(0, 1, 0), V(0, 0, 1), Curvature::Sphere), V(-1, 0, 0)) == 0.0);
  CHECK(dist(tangent_w(V(0, 1, 0), V(0, 0, 1), Curvature::Hyperbolic), V(1, 0, 0)) == 0.0);
  CHECK_THROWS_AS(tangent_w(V(0, 0, 0), M, Curvature::Sphere), DegenerateInput);
}

TEST_CASE("tangent_w is tangent as a polynomial identity") {
  RandomPolyGen gen(5);
  for (int i = 0; i < 30; ++i) {
    const MultiPoly G = gen.homogeneous({"x", "y", "z"}, 1 + i % 4, 6);
    for (const Curvature K : {Curvature::Sphere, Curvature::Hyperbolic}) {
      const auto w = tangent_w(G, K);
      CHECK((G.diff(0) * w[0] + G.diff(1) * w[1] + G.diff(2) * w[2]).is_zero());
    }
  }
}

TEST_CASE("dual of the diagonal quartic cone") {
  // The tangent-line dual of x^4 + 2 y^4 - z^4 on the sphere lies on it.
  const MultiPoly D = dual_diagonal_quartic(1, 2, -1);
  CHECK(D.degree() == 12);
  CHECK(D.is_homogeneous());
  for (int i = 0; i < 40; ++i) {
    const double t = 2 * std::numbers::pi * (i + 0.3) / 40;
    // Curve x^4 + 2y^4 = 1 in the z = 1 chart, parametrized by angle.
    const double c = std::cos(t), s = std::sin(t);
    const double scale = std::pow(std::pow(c, 4) + 2 * std::pow(s, 4), -0.25);
    const AmbientVector q = V(scale * c, scale * s, 1.0);
    // Tangent from the gradient (4x^3, 8y^3) rotated by 90 degrees.
    const AmbientVector tq = V(-8 * std::pow(q[1], 3), 4 * std::pow(q[0], 3), 0.0);
    const AmbientVector r = (1 / q.norm()) * q;
    AmbientVector v = tq - r.dot(tq) * r;
    v = (1 / v.norm()) * v;
    const AmbientVector M = dual_point(r, v, Curvature::Sphere);
    const std::array<double, 3> m{M[0], M[1], M[2]};
    CHECK(std::fabs(D.eval(std::span<const double>(m))) < 1e-10);
  }
}
