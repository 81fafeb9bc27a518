#include "birkhoff/series.hpp"

#include <stdexcept>

#include "birkhoff/errors.hpp"

namespace birkhoff {

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, unsigned order)
    : vars_(std::move(vars)), order_(order), c_(order + 1, MultiPoly(vars_)) {}

TruncatedSeries TruncatedSeries::constant(const MultiPoly& c, unsigned order) {
  TruncatedSeries s(c.vars(), order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::linear(const MultiPoly& c0, const MultiPoly& c1, unsigned order) {
  TruncatedSeries s(c0.vars(), order);
  s.c_[0] = c0;
  if (order >= 1) s.c_[1] = c1;
  return s;
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series truncation orders differ");
  if (vars_ != o.vars_) throw ArityError("series coefficients live in different rings");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check(o);
  for (unsigned i = 0; i <= order_; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check(o);
  for (unsigned i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check(b);
  TruncatedSeries r(a.vars_, a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries operator*(TruncatedSeries a, const MultiPoly& c) {
  for (auto& v : a.c_) v = v * c;
  return a;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries r = constant(MultiPoly(vars_, Coeff(1L)), order_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

namespace {

void require_unit_constant(const TruncatedSeries& s) {
  const MultiPoly one(s.vars(), Coeff(1L));
  if (!(s[0] == one)) throw std::invalid_argument("series constant coefficient must be exactly 1");
}

}  // namespace

TruncatedSeries TruncatedSeries::reciprocal() const {
  require_unit_constant(*this);
  // 1/(1 + t) = sum_j (-t)^j with t = s - 1
  TruncatedSeries t = *this;
  t.c_[0] = MultiPoly(vars_);
  const TruncatedSeries neg = -t;
  TruncatedSeries term = constant(MultiPoly(vars_, Coeff(1L)), order_);
  TruncatedSeries sum = term;
  for (unsigned j = 1; j <= order_; ++j) {
    term = term * neg;
    sum += term;
  }
  return sum;
}

TruncatedSeries TruncatedSeries::pow_formal_p() const {
  require_unit_constant(*this);
  TruncatedSeries t = *this;
  t.c_[0] = MultiPoly(vars_);
  TruncatedSeries term = constant(MultiPoly(vars_, Coeff(1L)), order_);
  TruncatedSeries sum = term;
  for (unsigned j = 1; j <= order_; ++j) {
    term = term * t;
    TruncatedSeries scaled = term;
    for (auto& c : scaled.c_) c *= binomial_p(j);
    sum += scaled;
  }
  return sum;
}

TruncatedSeries TruncatedSeries::reflect() const {
  TruncatedSeries r = *this;
  for (unsigned i = 1; i <= order_; i += 2) r.c_[i] = -r.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the truncation order");
  TruncatedSeries r(vars_, order);
  for (unsigned i = 0; i <= order; ++i) r.c_[i] = c_[i];
  return r;
}

TruncatedSeries compose_series(const MultiPoly& g, const TruncatedSeries& argX,
                               const TruncatedSeries& argY, const TruncatedSeries& prefactor) {
  if (argX.order() != argY.order() || argX.order() != prefactor.order())
    throw std::invalid_argument("series truncation orders differ");
  if (g.arity() != 2 || g.vars() != argX.vars())
    throw ArityError("g must live in the two-variable ring of the series");
  const unsigned order = argX.order();
  const auto& vars = argX.vars();
  const unsigned dx = static_cast<unsigned>(std::max(0, g.degree_in(0)));
  const unsigned dy = static_cast<unsigned>(std::max(0, g.degree_in(1)));
  std::vector<TruncatedSeries> px{TruncatedSeries::constant(MultiPoly(vars, Coeff(1L)), order)};
  std::vector<TruncatedSeries> py = px;
  for (unsigned i = 1; i <= dx; ++i) px.push_back(px.back() * argX);
  for (unsigned i = 1; i <= dy; ++i) py.push_back(py.back() * argY);
  TruncatedSeries sum(vars, order);
  for (const auto& [m, c] : g.terms()) {
    TruncatedSeries t = px[m.e[0]] * py[m.e[1]];
    for (unsigned i = 0; i <= order; ++i) t[i] *= c;
    sum += t;
  }
  return prefactor * sum;
}

}  // namespace birkhoff
