#include "birkhoff/dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "birkhoff/errors.hpp"

namespace birkhoff {

NumericPoly::NumericPoly(const MultiPoly& f) {
  if (f.arity() != 3) throw ArityError("NumericPoly expects a polynomial in three variables");
  if (!f.is_rational()) throw std::invalid_argument("NumericPoly needs rational coefficients");
  scale_ = 0.0;
  for (const auto& [m, c] : f.terms()) {
    const Rational q = c.constant();
    const long double v = static_cast<long double>(q.get_num().get_d()) / static_cast<long double>(q.get_den().get_d());
    terms_.push_back({v, {m.e[0], m.e[1], m.e[2]}});
    scale_ = std::max(scale_, static_cast<double>(std::fabs(v)));
  }
  if (scale_ == 0.0) scale_ = 1.0;
  if (f.degree() >= 1)
    for (std::size_t i = 0; i < 3; ++i) grad_.emplace_back(f.diff(i));
}

AmbientVector NumericPoly::gradient(const AmbientVector& r) const {
  if (grad_.empty()) return {};
  return {{grad_[0](r), grad_[1](r), grad_[2](r)}};
}

std::array<long double, 3> NumericPoly::gradient(const std::array<long double, 3>& r) const {
  if (grad_.empty()) return {};
  return {grad_[0](r), grad_[1](r), grad_[2](r)};
}

namespace {

constexpr double kPi = std::numbers::pi;

AmbientVector metric(const AmbientVector& a, Curvature K) { return {{a[0], a[1], sign(K) * a[2]}}; }

double form(const AmbientVector& a, const AmbientVector& b, Curvature K) { return minkowski_form(a, b, K); }

AmbientVector unit(const AmbientVector& a, Curvature K) {
  const double n2 = form(a, a, K);
  if (!(n2 > 0)) throw NumericFailure("tangent vector is not spacelike");
  return (1.0 / std::sqrt(n2)) * a;
}

AmbientVector project_point(const AmbientVector& r, Curvature K) {
  const double q = form(r, r, K);
  if (K == Curvature::Sphere) return (1.0 / std::sqrt(q)) * r;
  if (!(q < 0)) throw NumericFailure("point left the hyperboloid");
  AmbientVector out = (1.0 / std::sqrt(-q)) * r;
  if (out[2] < 0) out = -out;
  return out;
}

// cos/sin on the sphere, cosh/sinh on the hyperboloid.
template <class T>
std::pair<T, T> trig(T t, Curvature K) {
  if (K == Curvature::Sphere) return {std::cos(t), std::sin(t)};
  return {std::cosh(t), std::sinh(t)};
}

double exit_time(const ConeBoundary& b, const BilliardState& s, double step, double horizon) {
  for (double t = step; t <= horizon; t += step)
    if (b.value(geodesic(s, t, b.curvature()).r) >= 0) return t;
  return -1;
}

AmbientVector polish_grid(const ConeBoundary& b, const BilliardState& s, double lo, double hi, double& t_out) {
  const Curvature K = b.curvature();
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (b.value(geodesic(s, mid, K).r) < 0) lo = mid; else hi = mid;
  }
  double t = 0.5 * (lo + hi);
  BilliardState g = geodesic(s, t, K);
  double f = b.value(g.r);
  for (int i = 0; i < 3; ++i) {
    const double df = b.gradient(g.r).dot(g.v);
    if (df == 0) break;
    const double tn = t - f / df;
    if (tn < lo - 1e-12 || tn > hi + 1e-12) break;
    const BilliardState gn = geodesic(s, tn, K);
    const double fn = b.value(gn.r);
    if (std::fabs(fn) >= std::fabs(f)) break;
    t = tn, g = gn, f = fn;
  }
  t_out = t;
  return g.r;
}

}  // namespace

double state_defect(const BilliardState& s, Curvature K) {
  return std::max({std::fabs(form(s.r, s.r, K) - sign(K)), std::fabs(form(s.r, s.v, K)),
                   std::fabs(form(s.v, s.v, K) - 1.0)});
}

void check_state(const BilliardState& s, Curvature K, double tol) {
  const double d = state_defect(s, K);
  if (!(d <= tol) || !s.r.finite() || !s.v.finite() || (K == Curvature::Hyperbolic && s.r[2] <= 0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "state invariants violated (defect %.3g) at r = (%.17g, %.17g, %.17g)", d,
                  s.r[0], s.r[1], s.r[2]);
    throw NumericFailure(buf);
  }
}

BilliardState reproject(const BilliardState& s, Curvature K) {
  const AmbientVector r = project_point(s.r, K);
  // <r,r> = K, so the component of v along r is K <v,r> r.
  const AmbientVector v = s.v - (sign(K) * form(s.v, r, K)) * r;
  return {r, unit(v, K)};
}

BilliardState geodesic(const BilliardState& s, double t, Curvature K) {
  const auto [c, sn] = trig(t, K);
  return {c * s.r + sn * s.v, (-sign(K) * sn) * s.r + c * s.v};
}

std::array<AmbientVector, 2> tangent_frame(const AmbientVector& r, Curvature K) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(r[i]) < std::fabs(r[k])) k = i;
  AmbientVector a{};
  a[k] = 1;
  const AmbientVector e1 = unit(a - (sign(K) * form(a, r, K)) * r, K);
  const AmbientVector e2 = unit(metric(wedge(r, e1), K), K);
  return {e1, e2};
}

ConeBoundary::ConeBoundary(const MultiPoly& C, Curvature K, bool interior_negative,
                           std::optional<AmbientVector> interior)
    : C_(C), K_(K), sign_(interior_negative ? 1.0 : -1.0) {
  if (C.arity() != 3) throw ArityError("cone polynomial must be in three variables");
  if (C.is_zero() || !C.is_rational() || !C.is_homogeneous() || C.degree() < 1)
    throw DegenerateInput("cone polynomial must be a nonzero rational homogeneous form");
  num_ = NumericPoly(C);
  if (interior) {
    interior_ = project_point(*interior, K);
    if (!(value(interior_) < 0)) throw DegenerateInput("the given point is not inside the domain");
  } else {
    std::vector<AmbientVector> candidates{{{0, 0, 1}}};
    if (K == Curvature::Sphere)
      candidates.insert(candidates.end(), {{{0, 0, -1}}, {{1, 0, 0}}, {{-1, 0, 0}}, {{0, 1, 0}}, {{0, -1, 0}}});
    bool found = false;
    for (const auto& c : candidates)
      if (value(c) < -1e-12 * num_.scale()) {
        interior_ = c;
        found = true;
        break;
      }
    if (!found) throw DegenerateInput("the domain contains none of the coordinate symmetry points");
  }
  const auto [e1, e2] = tangent_frame(interior_, K);
  const double step = K == Curvature::Sphere ? kPi / 1024 : 1.0 / 128;
  const double horizon = K == Curvature::Sphere ? kPi : 32.0;
  double reach = 0.0;
  for (int j = 0; j < 64; ++j) {
    const double phi = 2 * kPi * j / 64;
    const double t = exit_time(*this, {interior_, std::cos(phi) * e1 + std::sin(phi) * e2}, step, horizon);
    if (t < 0) throw DegenerateInput("the domain is not bounded along every geodesic from its interior point");
    reach = std::max(reach, t);
  }
  diameter_ = 2 * reach;
}

std::array<long double, 3> ConeBoundary::gradient(const std::array<long double, 3>& r) const {
  auto g = num_.gradient(r);
  for (auto& x : g) x *= sign_;
  return g;
}

AmbientVector ConeBoundary::normal(const AmbientVector& r) const {
  const AmbientVector xi = metric(gradient(r), K_);
  const AmbientVector n = xi - (sign(K_) * form(xi, r, K_)) * r;
  const double n2 = form(n, n, K_);
  if (!(n2 > 1e-28 * std::max(1.0, xi.dot(xi)))) throw DegenerateInput("boundary normal vanishes: gradient is parallel to r");
  return (1.0 / std::sqrt(n2)) * n;
}

AmbientVector ConeBoundary::tangent(const AmbientVector& r) const { return unit(metric(wedge(r, normal(r)), K_), K_); }

bool ConeBoundary::on_boundary(const AmbientVector& r, double tol) const {
  return std::fabs(value(r)) <= tol * std::max(1.0, gradient(r).norm());
}

double ConeBoundary::max_flight() const { return K_ == Curvature::Sphere ? kPi : 4 * diameter_ + 1; }

Hit next_hit(const BilliardState& s, const ConeBoundary& b) {
  const Curvature K = b.curvature();
  const double h = b.scan_step(), horizon = b.max_flight();
  double t = 0.0;
  if (b.value(s.r) >= 0 || b.on_boundary(s.r)) {
    bool inward = false;
    for (const double cand : {h, h / 16, h / 256})
      if (b.value(geodesic(s, cand, K).r) < 0) {
        t = cand;
        inward = true;
        break;
      }
    if (!inward) throw NumericFailure("no transversal hit: the geodesic does not enter the domain");
  }
  for (;;) {
    const double tn = std::min(t + h, horizon);
    if (b.value(geodesic(s, tn, K).r) >= 0) {
      double t_hit = 0;
      polish_grid(b, s, t, tn, t_hit);
      const BilliardState g = reproject(geodesic(s, t_hit, K), K);
      const double f = b.value(g.r);
      if (!(std::fabs(f) < 1e-12 * std::max(1.0, b.gradient(g.r).norm())))
        throw NumericFailure("boundary hit did not converge");
      return {t_hit, g};
    }
    if (tn >= horizon) throw NumericFailure("no boundary crossing before the flight horizon: trajectory escaped");
    t = tn;
  }
}

BilliardState reflect(const BilliardState& hit, const ConeBoundary& b) {
  const Curvature K = b.curvature();
  const AmbientVector n = b.normal(hit.r);
  const BilliardState out = reproject({hit.r, hit.v - (2 * form(hit.v, n, K)) * n}, K);
  check_state(out, K);
  return out;
}

double Orbit::max_residual() const {
  double m = 0;
  for (double r : integral_residuals) m = std::max(m, r);
  return m;
}

Orbit run_orbit(const BilliardState& start, const ConeBoundary& b, int bounces, const std::optional<MultiPoly>& psi) {
  if (bounces < 1) throw std::invalid_argument("bounces must be >= 1");
  const Curvature K = b.curvature();
  check_state(start, K);
  if (!(b.value(start.r) < 0)) throw DegenerateInput("start point is not inside the domain");
  std::optional<NumericPoly> P;
  if (psi) P.emplace(*psi);
  Orbit o;
  o.states.reserve(bounces + 1);
  auto record = [&](const BilliardState& s) {
    o.states.push_back(s);
    o.momenta.push_back(wedge(s.r, s.v));
    if (P) o.integral_residuals.push_back(std::fabs((*P)(o.momenta.back()) - (*P)(o.momenta.front())));
  };
  record(start);
  for (int i = 0; i < bounces; ++i) {
    const Hit h = next_hit(o.states.back(), b);
    check_state(h.state, K);
    const AmbientVector drift = wedge(h.state.r, h.state.v) - o.momenta.back();
    if (!(drift.norm() < 1e-10 * std::max(1.0, o.momenta.back().norm())))
      throw NumericFailure("momentum drifted during a free flight");
    o.flight_times.push_back(h.t);
    record(reflect(h.state, b));
  }
  return o;
}

BilliardState default_start(const ConeBoundary& b, double angle, double offset) {
  const Curvature K = b.curvature();
  const BilliardState moved = geodesic({b.interior_point(), tangent_frame(b.interior_point(), K)[0]}, offset, K);
  const AmbientVector e2 = unit(metric(wedge(moved.r, moved.v), K), K);
  const BilliardState s = reproject({moved.r, std::cos(angle) * moved.v + std::sin(angle) * e2}, K);
  if (!(b.value(s.r) < 0)) throw DegenerateInput("start offset leaves the domain");
  return s;
}

std::vector<BilliardState> boundary_samples(const ConeBoundary& b, int count, double offset) {
  if (count < 1) throw std::invalid_argument("boundary_samples needs count >= 1");
  const auto [e1, e2] = tangent_frame(b.interior_point(), b.curvature());
  std::vector<BilliardState> out;
  for (int j = 0; j < count; ++j) {
    const double phi = 2 * kPi * (j + offset) / count;
    const Hit h = next_hit({b.interior_point(), std::cos(phi) * e1 + std::sin(phi) * e2}, b);
    out.push_back({h.state.r, b.tangent(h.state.r)});
  }
  return out;
}

double geodesic_curvature(const ConeBoundary& b, const AmbientVector& r, double h) {
  using LD = long double;
  const Curvature K = b.curvature();
  if (!b.on_boundary(r, 1e-8)) throw std::invalid_argument("geodesic_curvature: r is not on the boundary");
  const AmbientVector n = b.normal(r), t = b.tangent(r);
  const LD k = sign(K);
  // Offset of gamma from its tangent geodesic along the (parallel) normal n.
  auto offset = [&](LD tau) {
    const auto [ct, st] = trig<LD>(tau, K);
    std::array<LD, 3> g{};
    for (int i = 0; i < 3; ++i) g[i] = ct * r[i] + st * t[i];
    LD s = 0;
    for (int it = 0; it < 30; ++it) {
      const auto [cs, ss] = trig<LD>(s, K);
      std::array<LD, 3> q{}, dq{};
      for (int i = 0; i < 3; ++i) {
        q[i] = cs * g[i] + ss * n[i];
        dq[i] = -k * ss * g[i] + cs * n[i];
      }
      const LD f = b.value(q);
      const auto gr = b.gradient(q);
      const LD df = gr[0] * dq[0] + gr[1] * dq[1] + gr[2] * dq[2];
      if (df == 0) throw DegenerateInput("geodesic_curvature: singular projection");
      const LD step = f / df;
      s -= step;
      if (std::fabs(step) < 1e-21L) break;
    }
    return s;
  };
  const LD s0 = offset(0);
  auto second = [&](LD hh) { return (offset(hh) + offset(-hh) - 2 * s0) / (hh * hh); };
  const LD d1 = second(h), d2 = second(2 * h);
  return static_cast<double>(-(4 * d1 - d2) / 3);
}

std::vector<double> pm_deviations(const ConeBoundary& b, const MultiPoly& psi, const MultiPoly& F_dual,
                                  std::span<const double> epsilons, int samples) {
  const Curvature K = b.curvature();
  const NumericPoly P(psi), F(F_dual);
  std::vector<double> dev(epsilons.size(), 0.0);
  for (const auto& s : boundary_samples(b, samples)) {
    const AmbientVector M = dual_point(s.r, s.v, K, 1e-9);
    if (!(std::fabs(P(M)) <= 1e-9 * P.scale()))
      throw std::invalid_argument("psi does not vanish on the dual curve");
    AmbientVector w = tangent_w(F.gradient(M), M, K);
    w = (1.0 / w.norm()) * w;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      const double e = epsilons[i];
      dev[i] = std::max(dev[i], std::fabs(P(M - e * w) - P(M + e * w)));
    }
  }
  return dev;
}

double theorem_pm_check(const ConeBoundary& b, const MultiPoly& psi, const MultiPoly& F_dual,
                        std::span<const double> epsilons, int samples) {
  double m = 0;
  for (double d : pm_deviations(b, psi, F_dual, epsilons, samples)) m = std::max(m, d);
  return m;
}

MidpointReport midpoint_remark_check(const ConeBoundary& b, int samples, double eps) {
  const Curvature K = b.curvature();
  MidpointReport rep;
  auto to_surface = [&](const AmbientVector& P) { return (1.0 / std::sqrt(std::fabs(form(P, P, K)))) * P; };
  auto inf_norm = [](const AmbientVector& a) { return std::max({std::fabs(a[0]), std::fabs(a[1]), std::fabs(a[2])}); };
  for (const auto& s : boundary_samples(b, samples)) {
    const double k = geodesic_curvature(b, s.r);
    if (std::fabs(k) < 1e-9) throw DegenerateInput("geodesic boundary arc: k vanishes");
    const AmbientVector n = b.normal(s.r);
    const AmbientVector M = dual_point(s.r, s.v, K, 1e-9);
    const AmbientVector Pm = wedge(s.r, s.v - (eps * k) * n), Pp = wedge(s.r, s.v + (eps * k) * n);
    const AmbientVector Mm = to_surface(Pm), Mp = to_surface(Pp);
    rep.algebraic = std::max(rep.algebraic, inf_norm(Pm + Pp - 2.0 * M));
    rep.midpoint = std::max(rep.midpoint, inf_norm(to_surface(Pm + Pp) - M));
    rep.equidistance = std::max(rep.equidistance, std::fabs(form(Mm, M, K) - form(M, Mp, K)));
    rep.surface = std::max({rep.surface, std::fabs(form(Mm, Mm, K) - 1), std::fabs(form(Mp, Mp, K) - 1)});
  }
  return rep;
}

QuadraticCoefficients quadratic_coefficients(const MultiPoly& q) {
  if (q.arity() != 3) throw ArityError("quadratic_coefficients expects three variables");
  if (!q.is_rational() || !(q.is_zero() || (q.is_homogeneous() && q.degree() == 2)))
    throw std::invalid_argument("quadratic_coefficients expects a rational quadratic form");
  static constexpr std::array<std::array<std::uint16_t, 3>, 6> mons{
      {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  QuadraticCoefficients out{};
  for (std::size_t i = 0; i < 6; ++i) {
    Monomial m;
    for (std::size_t j = 0; j < 3; ++j) m.e[j] = mons[i][j];
    out[i] = q.coeff(m).to_double();
  }
  return out;
}

QuadraticCoefficients normalized(QuadraticCoefficients q) {
  double n = 0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    n += q[i] * q[i];
    if (std::fabs(q[i]) > std::fabs(q[big])) big = i;
  }
  if (n == 0) return q;
  const double s = (q[big] < 0 ? -1.0 : 1.0) / std::sqrt(n);
  for (auto& c : q) c *= s;
  return q;
}

namespace {

Eigen::Matrix<double, 1, 6> monomials(const AmbientVector& M) {
  Eigen::Matrix<double, 1, 6> row;
  row << M[0] * M[0], M[1] * M[1], M[2] * M[2], M[0] * M[1], M[0] * M[2], M[1] * M[2];
  return row;
}

}  // namespace

QuadraticFit fit_conserved_quadratic(const Orbit& orbit, const ConeBoundary& b, int boundary_points) {
  if (orbit.momenta.size() < 7) throw std::invalid_argument("fit_conserved_quadratic needs at least 7 momenta");
  const Eigen::Index n = static_cast<Eigen::Index>(orbit.momenta.size()) - 1;
  Eigen::MatrixXd A(n, 6);
  const auto m0 = monomials(orbit.momenta.front());
  for (Eigen::Index i = 0; i < n; ++i) A.row(i) = monomials(orbit.momenta[i + 1]) - m0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  QuadraticFit fit;
  for (int i = 0; i < 6; ++i) fit.singular_values[i] = svd.singularValues()(i);
  const Eigen::Matrix<double, 6, 2> N = svd.matrixV().rightCols<2>();

  const auto samples = boundary_samples(b, boundary_points);
  Eigen::MatrixXd B(static_cast<Eigen::Index>(samples.size()), 2);
  std::vector<AmbientVector> duals;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    duals.push_back(dual_point(samples[j].r, samples[j].v, b.curvature(), 1e-9));
    B.row(static_cast<Eigen::Index>(j)) = monomials(duals.back()) * N;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd2(B, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 6, 1> q = N * svd2.matrixV().col(1);
  for (int i = 0; i < 6; ++i) fit.coefficients[i] = q(i);
  fit.coefficients = normalized(fit.coefficients);
  Eigen::Matrix<double, 6, 1> qn;
  for (int i = 0; i < 6; ++i) qn(i) = fit.coefficients[i];
  for (const auto& M : duals) fit.boundary_residual = std::max(fit.boundary_residual, std::fabs((monomials(M) * qn)(0)));
  return fit;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope needs two matching samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw std::invalid_argument("loglog_slope needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit) {
  out << "bounce,r1,r2,r3,v1,v2,v3,M1,M2,M3,psi_residual\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << ',' << buf;
  };
  for (std::size_t i = 0; i < orbit.states.size(); ++i) {
    out << i;
    const auto& s = orbit.states[i];
    for (double v : s.r.c) num(v);
    for (double v : s.v.c) num(v);
    for (double v : orbit.momenta[i].c) num(v);
    if (i < orbit.integral_residuals.size()) num(orbit.integral_residuals[i]);
    else out << ',';
    out << '\n';
  }
}

}  // namespace birkhoff
