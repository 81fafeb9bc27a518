#include "birkhoff/univariate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "birkhoff/errors.hpp"

namespace birkhoff {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& u, std::size_t var) {
  std::vector<Rational> c(u.is_zero() ? 0 : static_cast<std::size_t>(u.degree_in(var)) + 1);
  for (const auto& [m, coeff] : u.terms()) {
    if (m.degree() != m.e[var]) throw ArityError("polynomial is not univariate in the chosen variable");
    c[m.e[var]] += coeff.constant();
  }
  return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multi(const std::vector<std::string>& vars, std::size_t var) const {
  MultiPoly r(vars);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Monomial m;
    m.e[var] = static_cast<std::uint16_t>(i);
    r += MultiPoly::monomial(vars, m, Coeff(c_[i]));
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> d = c_;
  const Rational lead = c_.back();
  for (auto& v : d) v /= lead;
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<long double> UniPoly::eval(std::complex<long double> t) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + static_cast<long double>(it->get_d());
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rational> rem = a.c_;
  if (a.degree() < b.degree()) {
    q = {};
    r = a;
    return;
  }
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational& lead = b.c_.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + b.c_.size() - 1] / lead;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(b.c_.size() - 1);
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<UniPoly> out;
  if (u.degree() == 0) return out;
  // Yun's algorithm.
  const UniPoly du = u.derivative();
  UniPoly a = gcd(u, du);
  UniPoly b, c, d, r;
  UniPoly::divmod(u, a, b, r);
  UniPoly::divmod(du, a, c, r);
  d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly f = gcd(b, d);
    out.push_back(f);
    UniPoly nb, nc;
    UniPoly::divmod(b, f, nb, r);
    UniPoly::divmod(d, f, nc, r);
    b = nb;
    c = nc;
    d = c - b.derivative();
  }
  return out;
}

std::vector<std::complex<double>> complex_roots(const UniPoly& sf) {
  const int n = sf.degree();
  if (n <= 0) return {};
  const UniPoly m = sf.monic();
  std::vector<std::complex<double>> roots;
  if (n == 1) {
    roots.emplace_back(-m.coeffs()[0].get_d(), 0.0);
    return roots;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -m.coeffs()[static_cast<std::size_t>(i)].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw NumericFailure("companion eigenvalue solver failed");
  const UniPoly dm = m.derivative();
  for (int i = 0; i < n; ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 50; ++it) {
      const auto fz = m.eval(z);
      const auto dz = dm.eval(z);
      if (std::abs(dz) == 0.0L) break;
      const auto step = fz / dz;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z))) break;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  // Conjugate pairs of a real polynomial: snap tiny imaginary parts.
  for (auto& r : roots)
    if (std::fabs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r))) r = {r.real(), 0.0};
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace birkhoff
