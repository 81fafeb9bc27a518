#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/coeff.hpp"

namespace birkhoff {

inline constexpr std::size_t kMaxVars = 4;

/// Exponent vector; entries past the ring arity are always zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const;
  bool divides(const Monomial& o) const;
  friend Monomial operator+(const Monomial& a, const Monomial& b);
  friend Monomial operator-(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, variables ranked by position (x > y > z).
/// Sorting with this comparator puts the leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over Q[p] (Q when no coefficient mentions p).
///
/// Values are immutable in spirit: every operation returns a new polynomial and
/// nothing is shared, so instances can be passed across threads freely. The
/// variable list is part of the value; binary operations on different lists
/// throw ArityError.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coeff, GrlexGreater>;

  MultiPoly() : MultiPoly(std::vector<std::string>{"x", "y", "z"}) {}
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const Coeff& c);

  /// The i-th ring variable as a polynomial.
  static MultiPoly variable(const std::vector<std::string>& vars, std::size_t i);
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly monomial(const std::vector<std::string>& vars, const Monomial& m, const Coeff& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t var_index(const std::string& name) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True when no coefficient depends on p.
  bool is_rational() const;
  /// Total degree; kMinusInfinity for zero.
  int degree() const;
  /// Degree in a single variable; kMinusInfinity for zero.
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  const Coeff& leading_coeff() const;
  Coeff coeff(const Monomial& m) const;
  /// Constant term as a Coeff (zero if absent).
  Coeff constant_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Coeff& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Coeff& c) { return a *= c; }
  friend MultiPoly operator*(const Coeff& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;
  MultiPoly diff(std::size_t var) const;
  MultiPoly diff(const std::string& var) const { return diff(var_index(var)); }

  /// Substitute a rational value for one variable; the ring is unchanged.
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  /// Substitute polynomials (all in one common ring) for every variable.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// Replace the formal parameter by a rational value.
  MultiPoly eval_p(const Rational& p) const;
  /// Same terms, variables renamed (arity must match).
  MultiPoly with_vars(std::vector<std::string> vars) const;
  /// Drop variables that do not occur, keeping the others in order.
  MultiPoly restrict_to(const std::vector<std::string>& vars) const;
  /// Embed into a larger ring whose variable list contains ours.
  MultiPoly embed(const std::vector<std::string>& vars) const;

  Rational eval(std::span<const Rational> point) const;
  std::complex<double> eval(std::span<const std::complex<double>> point) const;
  double eval(std::span<const double> point) const;
  /// Largest |coefficient| (rational part only); 0 for the zero polynomial.
  double max_abs_coeff() const;
  /// Coefficients as univariate polynomials in one variable (index = power).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  /// Rendering in the text grammar, terms in grlex order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Coeff& c);
  void check_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

// ---- free operations -------------------------------------------------------

/// z -> 1 on an (x, y, z) polynomial; result lives in (x, y).
MultiPoly dehomogenize(const MultiPoly& F);
/// Multiply each term by z^(d - deg term); requires d >= deg f.
MultiPoly homogenize(const MultiPoly& f, int d);

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Single-divisor reduction in grlex order: a = q*f + r with no term of r
/// divisible by LT(f). Requires f != 0 with a p-free leading coefficient.
DivisionResult divide_remainder(const MultiPoly& a, const MultiPoly& f);
/// Normal form modulo f.
MultiPoly remainder(const MultiPoly& a, const MultiPoly& f);
/// Exact quotient; throws std::domain_error when f does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& f);

/// Sylvester-matrix resultant in `var`, evaluated by fraction-free Bareiss
/// elimination. The matrix uses the actual degrees of a and b in `var`.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var);
/// Resultant with explicit formal degrees (>= actual); leading zero
/// coefficients are padded into the Sylvester matrix.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var,
                    int formal_deg_a, int formal_deg_b);
/// First subresultant s1*var + s0 as the pair {s1, s0}, with the same formal
/// degree convention. At a zero of the resultant where the fibres share
/// exactly one root, that root is -s0/s1.
std::pair<MultiPoly, MultiPoly> subresultant1(const MultiPoly& a, const MultiPoly& b,
                                              std::size_t var, int formal_deg_a,
                                              int formal_deg_b);

/// Coefficients (increasing powers of `var`) of the j-th subresultant, same
/// formal degree convention, 0 <= j <= min(m, n). At a point where the leading
/// coefficients survive, the fibres' gcd has degree j exactly when the
/// principal coefficients of indices below j vanish and index j does not;
/// the gcd is then the j-th subresultant. For j equal to a formal degree the
/// corresponding input is returned.
std::vector<MultiPoly> subresultant(const MultiPoly& a, const MultiPoly& b, std::size_t var,
                                   int formal_deg_a, int formal_deg_b, int j);
/// Fraction-free determinant (Bareiss) of a square matrix of polynomials.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// u / gcd(u, u'), monic, for a polynomial in a single variable (ring arity 1).
MultiPoly squarefree_part(const MultiPoly& u);

}  // namespace birkhoff
