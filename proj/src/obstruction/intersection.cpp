#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "birkhoff/errors.hpp"
#include "birkhoff/obstruction.hpp"
#include "birkhoff/univariate.hpp"

namespace birkhoff {
namespace {

using cplx = std::complex<double>;
using Mat3 = std::array<std::array<long, 3>, 3>;  // original = L * projected

// Projection centres tried in order: the image of (0:0:1) under L.
std::vector<Mat3> candidate_transforms() {
  std::vector<Mat3> out{
      Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},  // eliminate z
      Mat3{{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}},  // eliminate y
      Mat3{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},  // eliminate x
  };
  const std::array<std::array<long, 2>, 10> shears{{
      {1, 2}, {2, -3}, {-3, 1}, {3, 5}, {5, -2}, {-4, 7}, {7, 3}, {2, 9}, {-6, -5}, {11, 4},
  }};
  for (const auto& [a, b] : shears) out.push_back(Mat3{{{1, 0, a}, {0, 1, b}, {0, 0, 1}}});
  return out;
}

MultiPoly apply(const MultiPoly& F, const Mat3& L) {
  const auto& vars = F.vars();
  std::vector<MultiPoly> images;
  for (const auto& row : L) {
    MultiPoly img(vars);
    for (std::size_t j = 0; j < 3; ++j)
      if (row[j] != 0) img += Coeff(row[j]) * MultiPoly::variable(vars, j);
    images.push_back(img);
  }
  return F.compose(images);
}

Monomial pure_power(std::size_t var, int e) {
  Monomial m;
  m.e[var] = static_cast<std::uint16_t>(e);
  return m;
}

std::complex<long double> to_ld(cplx z) { return {z.real(), z.imag()}; }

struct Equation {
  MultiPoly f;
  std::array<MultiPoly, 3> grad;
  double scale;

  explicit Equation(const MultiPoly& p)
      : f(p), grad{p.diff(0), p.diff(1), p.diff(2)}, scale(p.max_abs_coeff()) {}
  cplx value(const std::array<cplx, 3>& v) const { return f.eval(std::span<const cplx>(v)); }
  cplx d(std::size_t i, const std::array<cplx, 3>& v) const {
    return grad[i].eval(std::span<const cplx>(v));
  }
};

std::array<cplx, 3> unit_chart(std::array<cplx, 3> v, std::size_t& pivot) {
  pivot = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
  const cplx s = v[pivot];
  for (auto& c : v) c /= s;
  v[pivot] = 1.0;
  return v;
}

double residual(const Equation& a, const Equation& b, const std::array<cplx, 3>& v) {
  return std::max(std::abs(a.value(v)) / a.scale, std::abs(b.value(v)) / b.scale);
}

// Newton in the affine chart of the largest coordinate; steps are kept only
// while they reduce the residual, so tangential intersections stay put.
std::array<cplx, 3> polish(const Equation& a, const Equation& b, std::array<cplx, 3> v,
                           double& res) {
  std::size_t pivot = 0;
  v = unit_chart(v, pivot);
  const std::size_t i = (pivot + 1) % 3, j = (pivot + 2) % 3;
  res = residual(a, b, v);
  for (int it = 0; it < 40 && res > 0.0; ++it) {
    const cplx fa = a.value(v), fb = b.value(v);
    const cplx a11 = a.d(i, v), a12 = a.d(j, v), a21 = b.d(i, v), a22 = b.d(j, v);
    const cplx det = a11 * a22 - a12 * a21;
    if (std::abs(det) == 0.0) break;
    std::array<cplx, 3> next = v;
    next[i] -= (a22 * fa - a12 * fb) / det;
    next[j] -= (a11 * fb - a21 * fa) / det;
    const double r = residual(a, b, next);
    if (!(r < res)) break;
    v = next;
    res = r;
  }
  return v;
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
  const bool ra = a.is_real(), rb = b.is_real();
  if (ra != rb) return ra;
  for (std::size_t i = 0; i < 3; ++i)
    if (std::fabs(a[i].real() - b[i].real()) > 1e-9) return a[i].real() < b[i].real();
  for (std::size_t i = 0; i < 3; ++i)
    if (std::fabs(a[i].imag() - b[i].imag()) > 1e-9) return a[i].imag() < b[i].imag();
  return false;
}

enum class Outcome { Ok, NotGeneric, SharedComponent };

UniPoly constant_poly(const Rational& c) { return UniPoly({c}); }

UniPoly mod(const UniPoly& a, const UniPoly& m) {
  UniPoly q, r;
  UniPoly::divmod(a, m, q, r);
  return r;
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The fibre gcd S_j = sum s_i z^i has a single root of multiplicity j iff
// s_i (j s_j)^j = s_j binom(j, i) (j s_j)^i s_{j-1}^(j-i) for every i.
// Checked modulo phi, i.e. simultaneously at all roots of phi.
bool single_root_fibre(const std::vector<UniPoly>& s, int j, const UniPoly& phi) {
  if (j == 1) return true;
  const UniPoly js = constant_poly(j) * s[j];
  auto power = [&](const UniPoly& u, int e) {
    UniPoly r = constant_poly(1);
    for (int k = 0; k < e; ++k) r = mod(r * u, phi);
    return r;
  };
  const UniPoly jsj = power(js, j);
  for (int i = 0; i <= j; ++i) {
    const UniPoly lhs = mod(s[i] * jsj, phi);
    const UniPoly rhs = mod(constant_poly(binomial(j, i)) * s[j] * power(js, i) * power(s[j - 1], j - i), phi);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Outcome project_and_solve(const MultiPoly& F, const MultiPoly& G, const Mat3& L, int m, int n,
                          std::vector<std::pair<std::array<cplx, 3>, int>>& found) {
  const MultiPoly Fp = apply(F, L), Gp = apply(G, L);
  // Centre (0:0:1) must lie on neither curve: leading z-coefficients nonzero.
  if (Fp.coeff(pure_power(2, m)).is_zero() || Gp.coeff(pure_power(2, n)).is_zero())
    return Outcome::NotGeneric;
  const int jmax = std::min(m, n);

  // Finite fibres: chart y' = 1, eliminant in x'.
  const MultiPoly f1 = Fp.substitute(1, Rational(1)), g1 = Gp.substitute(1, Rational(1));
  const MultiPoly R = resultant(f1, g1, 2, m, n);
  if (R.is_zero()) return Outcome::SharedComponent;
  const UniPoly Ru = UniPoly::from_multi(R, 0);

  std::vector<std::vector<UniPoly>> sub(static_cast<std::size_t>(jmax) + 1);
  auto subres = [&](int j) -> const std::vector<UniPoly>& {
    auto& slot = sub[static_cast<std::size_t>(j)];
    if (slot.empty())
      for (const auto& c : subresultant(f1, g1, 2, m, n, j)) slot.push_back(UniPoly::from_multi(c, 0));
    return slot;
  };

  std::vector<std::pair<std::array<cplx, 3>, int>> local;
  const auto factors = squarefree_decomposition(Ru);
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    if (factors[idx].degree() <= 0) continue;
    // Split the roots of each factor by the degree of their fibre gcd.
    std::vector<std::pair<UniPoly, int>> work{{factors[idx], 1}};
    while (!work.empty()) {
      auto [phi, j] = work.back();
      work.pop_back();
      const auto& s = subres(j);
      const UniPoly g = gcd(phi, s[j]);
      if (g.degree() > 0) {
        if (g.degree() == phi.degree()) {
          if (j == jmax) return Outcome::SharedComponent;
          work.push_back({phi, j + 1});
        } else {
          UniPoly q, r;
          UniPoly::divmod(phi, g, q, r);
          work.push_back({g, j});
          work.push_back({q, j});
        }
        continue;
      }
      if (!single_root_fibre(s, j, phi)) return Outcome::NotGeneric;
      for (const cplx t : complex_roots(phi.monic())) {
        const std::complex<long double> tl = to_ld(t);
        const std::complex<long double> z =
            -s[j - 1].eval(tl) / (static_cast<long double>(j) * s[j].eval(tl));
        local.push_back(
            {{t, 1.0, cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()))}, static_cast<int>(idx + 1)});
      }
    }
  }

  // Fibre over (1:0): chart x' = 1 at y' = 0.
  const int at_infinity = m * n - Ru.degree();
  if (at_infinity > 0) {
    const MultiPoly fi = Fp.substitute(0, Rational(1)), gi = Gp.substitute(0, Rational(1));
    bool done = false;
    for (int j = 1; j <= jmax && !done; ++j) {
      std::vector<UniPoly> s;
      for (const auto& c : subresultant(fi, gi, 2, m, n, j))
        s.push_back(constant_poly(c.substitute(1, Rational(0)).constant_term().constant()));
      if (s[j].is_zero()) continue;
      // Reuse the fibre test with phi = t (evaluation at 0 is reduction mod t).
      if (!single_root_fibre(s, j, UniPoly({Rational(0), Rational(1)}))) return Outcome::NotGeneric;
      const Rational z = -s[j - 1].eval(Rational(0)) / (j * s[j].eval(Rational(0)));
      local.push_back({{1.0, 0.0, z.get_d()}, at_infinity});
      done = true;
    }
    if (!done) return Outcome::SharedComponent;
  }

  for (auto& [pt, mult] : local) {
    std::array<cplx, 3> orig{};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) orig[r] += static_cast<double>(L[r][c]) * pt[c];
    found.push_back({orig, mult});
  }
  return Outcome::Ok;
}

void require_curve(const MultiPoly& F, const char* what) {
  if (F.arity() != 3) throw ArityError(std::string(what) + " must be a polynomial in (x, y, z)");
  if (F.is_zero() || !F.is_homogeneous() || !F.is_rational() || F.degree() < 1)
    throw DegenerateInput(std::string(what) + " must be a nonconstant homogeneous rational polynomial");
}

double gradient_residual(const std::array<Equation, 3>& grads, double scale, const ProjPoint& P) {
  const std::array<cplx, 3> v = P.coords();
  double r = 0.0;
  for (const auto& e : grads) r = std::max(r, std::abs(e.value(v)) / scale);
  return r;
}

}  // namespace

std::vector<CurvePoint> intersect_curves(const MultiPoly& F, const MultiPoly& G) {
  require_curve(F, "F");
  require_curve(G, "G");
  if (F.vars() != G.vars()) throw ArityError("curves live in different rings");
  const int m = F.degree(), n = G.degree();
  for (const Mat3& L : candidate_transforms()) {
    std::vector<std::pair<std::array<cplx, 3>, int>> raw;
    const Outcome o = project_and_solve(F, G, L, m, n, raw);
    if (o == Outcome::SharedComponent) throw DegenerateInput("curves share a common component");
    if (o == Outcome::NotGeneric) continue;
    const Equation eF(F), eG(G);
    std::vector<CurvePoint> out;
    for (const auto& [v, mult] : raw) {
      double res = 0.0;
      const auto pv = polish(eF, eG, v, res);
      out.push_back({ProjPoint(pv), mult, res});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CurvePoint& a, const CurvePoint& b) { return point_less(a.point, b.point); });
    return out;
  }
  throw NumericFailure("no generic projection centre found among the candidates");
}

std::vector<CurvePoint> singular_points(const MultiPoly& F) {
  require_curve(F, "F");
  if (F.degree() < 2) throw DegenerateInput("singular_points needs degree >= 2");
  const MultiPoly Fn = F * Coeff(Rational(1 / Rational(F.leading_coeff().constant())));
  const std::array<MultiPoly, 3> g{Fn.diff(0), Fn.diff(1), Fn.diff(2)};
  const std::array<Equation, 3> eqs{Equation(g[0]), Equation(g[1]), Equation(g[2])};
  const double scale = Fn.max_abs_coeff();
  constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [a, b] : pairs) {
    if (g[a].is_zero() || g[b].is_zero()) continue;
    std::vector<CurvePoint> cand;
    try {
      cand = intersect_curves(g[a], g[b]);
    } catch (const DegenerateInput&) {
      continue;
    }
    std::vector<CurvePoint> out;
    for (auto& c : cand) {
      c.residual = gradient_residual(eqs, scale, c.point);
      if (c.residual < 1e-8) out.push_back(c);
    }
    return out;
  }
  throw DegenerateInput("partial derivatives share a common component (non-reduced curve)");
}

std::vector<CurvePoint> inflection_points(const MultiPoly& F) {
  require_curve(F, "F");
  if (F.degree() <= 2) return {};
  const MultiPoly H = hessian3(F);
  if (H.is_zero()) throw DegenerateInput("Hessian vanishes identically: the curve is a line component");
  const auto sing = singular_points(F);
  std::vector<CurvePoint> out;
  for (const auto& c : intersect_curves(F, H)) {
    const bool is_singular = std::any_of(sing.begin(), sing.end(), [&](const CurvePoint& s) {
      return s.point.projectively_equal(c.point, 1e-7);
    });
    if (!is_singular) out.push_back(c);
  }
  return out;
}

}  // namespace birkhoff
