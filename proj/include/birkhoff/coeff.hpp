#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace birkhoff {

/// Exact rational; GMP keeps it canonical (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Element of Q[p]: a dense univariate polynomial in the formal parameter p.
/// Constant elements are ordinary rationals; p never appears as an exponent.
class Coeff {
 public:
  Coeff() = default;
  Coeff(const Rational& c);  // NOLINT(google-explicit-constructor)
  Coeff(long c);             // NOLINT(google-explicit-constructor)
  Coeff(int c) : Coeff(static_cast<long>(c)) {}  // NOLINT
  /// Coefficients in increasing powers of p.
  static Coeff from_powers(std::vector<Rational> powers);
  static Coeff p();

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero element.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of p^i (zero past the degree).
  Rational at(std::size_t i) const;
  /// Requires is_constant().
  Rational constant() const;
  const std::vector<Rational>& powers() const { return c_; }

  Rational eval(const Rational& p) const;
  double to_double() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.c_ == b.c_; }

  /// Exact quotient in Q[p]; returns false when b does not divide *this.
  bool divide_exact(const Coeff& b, Coeff& quotient) const;

  /// Grammar rendering; non-constant values are parenthesized sums in p.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Generalized binomial coefficient binom(p, j) = p(p-1)...(p-j+1)/j! in Q[p].
Coeff binomial_p(unsigned j);

}  // namespace birkhoff
