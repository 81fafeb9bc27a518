#include "birkhoff/coeff.hpp"

#include <sstream>
#include <stdexcept>

namespace birkhoff {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Coeff::Coeff(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Coeff::Coeff(long c) {
  if (c != 0) c_.emplace_back(c);
}

Coeff Coeff::from_powers(std::vector<Rational> powers) {
  Coeff r;
  r.c_ = std::move(powers);
  r.trim();
  return r;
}

Coeff Coeff::p() { return from_powers({Rational(0), Rational(1)}); }

Rational Coeff::at(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational Coeff::constant() const {
  if (!is_constant()) throw std::domain_error("coefficient depends on the formal parameter p");
  return c_.empty() ? Rational(0) : c_[0];
}

Rational Coeff::eval(const Rational& p) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

double Coeff::to_double() const { return constant().get_d(); }

void Coeff::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& v : c_) v *= o.c_[0];
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

bool Coeff::divide_exact(const Coeff& b, Coeff& quotient) const {
  if (b.is_zero()) throw std::domain_error("division by zero coefficient");
  if (is_zero()) {
    quotient = Coeff();
    return true;
  }
  if (degree() < b.degree()) return false;
  std::vector<Rational> rem = c_;
  std::vector<Rational> q(c_.size() - b.c_.size() + 1);
  const Rational& lead = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = rem[k + b.c_.size() - 1] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  quotient = from_powers(std::move(q));
  return true;
}

std::string Coeff::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    Rational mag = abs(v);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'p';
    if (i > 1) os << '^' << i;
  }
  os << ')';
  return os.str();
}

Coeff binomial_p(unsigned j) {
  Coeff acc(1L);
  for (unsigned i = 0; i < j; ++i) {
    acc *= Coeff::p() - Coeff(static_cast<long>(i));
    acc *= Coeff(Rational(1, static_cast<long>(i + 1)));
  }
  return acc;
}

}  // namespace birkhoff
