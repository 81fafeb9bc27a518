#pragma once

#include <complex>
#include <string>
#include <vector>

#include "birkhoff/coeff.hpp"
#include "birkhoff/multipoly.hpp"

namespace birkhoff {

/// Dense univariate polynomial over Q, coefficients in increasing powers.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  /// From a MultiPoly whose only occurring variable is `var` (p-free).
  static UniPoly from_multi(const MultiPoly& u, std::size_t var);
  MultiPoly to_multi(const std::vector<std::string>& vars, std::size_t var) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  Rational eval(const Rational& t) const;
  std::complex<long double> eval(std::complex<long double> t) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; b != 0.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q (zero only if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Yun squarefree decomposition: u = lc * prod_i factors[i]^(i+1), each factor
/// monic and squarefree, pairwise coprime. Trailing entries may be 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& u);

/// All complex roots of a squarefree polynomial: companion-matrix eigenvalues
/// polished by Newton steps in extended precision.
std::vector<std::complex<double>> complex_roots(const UniPoly& squarefree);

}  // namespace birkhoff
