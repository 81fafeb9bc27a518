#pragma once

#include <vector>

#include "birkhoff/multipoly.hpp"

namespace birkhoff {

/// Power series in the expansion parameter mu, truncated at a fixed order.
/// Coefficient i multiplies mu^i; products drop powers above the order.
class TruncatedSeries {
 public:
  static constexpr unsigned kDefaultOrder = 3;

  TruncatedSeries(std::vector<std::string> vars, unsigned order = kDefaultOrder);
  /// The constant series c + 0*mu + ...
  static TruncatedSeries constant(const MultiPoly& c, unsigned order = kDefaultOrder);
  /// c0 + c1*mu (the common shape of the affine arguments).
  static TruncatedSeries linear(const MultiPoly& c0, const MultiPoly& c1,
                                unsigned order = kDefaultOrder);

  unsigned order() const { return order_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const MultiPoly& operator[](unsigned i) const { return c_.at(i); }
  MultiPoly& operator[](unsigned i) { return c_.at(i); }
  const std::vector<MultiPoly>& coefficients() const { return c_; }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const MultiPoly& c);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries pow(unsigned k) const;
  /// 1 / s for a series whose constant coefficient is exactly 1
  /// (geometric expansion).
  TruncatedSeries reciprocal() const;
  /// s^p with the formal parameter p, for a constant coefficient exactly 1:
  /// sum_j binom(p, j) (s - 1)^j.
  TruncatedSeries pow_formal_p() const;
  /// mu -> -mu.
  TruncatedSeries reflect() const;
  /// Drop every power above `order` (order <= current order).
  TruncatedSeries truncate(unsigned order) const;

 private:
  void check(const TruncatedSeries& o) const;

  std::vector<std::string> vars_;
  unsigned order_;
  std::vector<MultiPoly> c_;
};

/// Taylor expansion of prefactor * g(argX, argY) in mu up to the common order.
/// g lives in the same two-variable ring as the series coefficients.
TruncatedSeries compose_series(const MultiPoly& g, const TruncatedSeries& argX,
                               const TruncatedSeries& argY, const TruncatedSeries& prefactor);

}  // namespace birkhoff
