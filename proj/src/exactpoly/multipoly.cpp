#include "birkhoff/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "birkhoff/errors.hpp"
#include "birkhoff/univariate.hpp"

namespace birkhoff {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return r;
}

Monomial operator-(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw ArityError("at most 4 polynomial variables are supported");
}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Coeff& c) : MultiPoly(std::move(vars)) {
  add_term(Monomial{}, c);
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t i) {
  MultiPoly r(vars);
  if (i >= vars.size()) throw ArityError("variable index out of range");
  Monomial m;
  m.e[i] = 1;
  r.add_term(m, Coeff(1L));
  return r;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  MultiPoly probe(vars);
  return variable(vars, probe.var_index(name));
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, const Monomial& m,
                              const Coeff& c) {
  MultiPoly r(vars);
  for (std::size_t i = vars.size(); i < kMaxVars; ++i)
    if (m.e[i] != 0) throw ArityError("monomial exceeds ring arity");
  r.add_term(m, c);
  return r;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw ArityError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool MultiPoly::is_rational() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kMinusInfinity;
  return static_cast<int>(terms_.begin()->first.degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return kMinusInfinity;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Coeff& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Coeff MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

Coeff MultiPoly::constant_term() const { return coeff(Monomial{}); }

void MultiPoly::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw ArityError("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(vars_, Coeff(1L));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::diff(std::size_t var) const {
  if (var >= vars_.size()) throw ArityError("unknown variable index");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    r.add_term(d, c * Coeff(static_cast<long>(m.e[var])));
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= vars_.size()) throw ArityError("unknown variable index");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d.e[var] = 0;
    Rational pw = 1;
    for (unsigned i = 0; i < m.e[var]; ++i) pw *= value;
    r.add_term(d, c * Coeff(pw));
  }
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size()) throw ArityError("compose needs one image per variable");
  const auto& target = images.empty() ? vars_ : images.front().vars();
  for (const auto& im : images)
    if (im.vars() != target) throw ArityError("compose images live in different rings");
  // powers[i][k] = images[i]^k, grown lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].emplace_back(target, Coeff(1L));
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.e[i] != 0) t = t * power(i, m.e[i]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::eval_p(const Rational& p) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, Coeff(c.eval(p)));
  return r;
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) throw ArityError("renaming must keep the arity");
  MultiPoly r = *this;
  r.vars_ = std::move(vars);
  return r;
}

MultiPoly MultiPoly::restrict_to(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> map;  // target position -> source index
  for (const auto& v : vars) map.push_back(var_index(v));
  MultiPoly r(vars);
  for (const auto& [m, c] : terms_) {
    Monomial d;
    unsigned kept = 0;
    for (std::size_t j = 0; j < map.size(); ++j) {
      d.e[j] = m.e[map[j]];
      kept += d.e[j];
    }
    if (kept != m.degree()) throw ArityError("polynomial uses a variable outside the target ring");
    r.add_term(d, c);
  }
  return r;
}

MultiPoly MultiPoly::embed(const std::vector<std::string>& vars) const {
  MultiPoly probe(vars);
  std::vector<std::size_t> pos;
  for (const auto& v : vars_) pos.push_back(probe.var_index(v));
  MultiPoly r(vars);
  for (const auto& [m, c] : terms_) {
    Monomial d;
    for (std::size_t i = 0; i < vars_.size(); ++i) d.e[pos[i]] = m.e[i];
    r.add_term(d, c);
  }
  return r;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw ArityError("evaluation point has wrong arity");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c.constant();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::complex<double> MultiPoly::eval(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_.size()) throw ArityError("evaluation point has wrong arity");
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_double();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

double MultiPoly::eval(std::span<const double> point) const {
  if (point.size() != vars_.size()) throw ArityError("evaluation point has wrong arity");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

double MultiPoly::max_abs_coeff() const {
  double best = 0.0;
  for (const auto& [m, c] : terms_)
    for (const auto& v : c.powers()) best = std::max(best, std::fabs(v.get_d()));
  return best;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  if (var >= vars_.size()) throw ArityError("unknown variable index");
  const int d = degree_in(var);
  std::vector<MultiPoly> out(d < 0 ? 0 : static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.e[var] = 0;
    out[m.e[var]].add_term(rest, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (m.e[i] > 1) mono += '^' + std::to_string(m.e[i]);
    }
    if (c.is_constant()) {
      const Rational v = c.constant();
      const Rational mag = abs(v);
      if (first) {
        if (v < 0) os << '-';
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      if (mono.empty()) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << '*';
        os << mono;
      }
    } else {
      if (!first) os << " + ";
      os << c.to_string();
      if (!mono.empty()) os << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

// ---- free operations -------------------------------------------------------

MultiPoly dehomogenize(const MultiPoly& F) {
  if (F.arity() != 3) throw ArityError("dehomogenize expects a polynomial in (x, y, z)");
  std::vector<std::string> affine(F.vars().begin(), F.vars().begin() + 2);
  return F.substitute(2, Rational(1)).restrict_to(affine);
}

MultiPoly homogenize(const MultiPoly& f, int d) {
  if (f.arity() != 2) throw ArityError("homogenize expects a polynomial in (x, y)");
  if (!f.is_zero() && d < f.degree())
    throw std::invalid_argument("homogenization degree below the polynomial degree");
  std::vector<std::string> vars = f.vars();
  vars.emplace_back("z");
  MultiPoly r(vars);
  for (const auto& [m, c] : f.terms()) {
    Monomial h = m;
    h.e[2] = static_cast<std::uint16_t>(d - static_cast<int>(m.degree()));
    r += MultiPoly::monomial(vars, h, c);
  }
  return r;
}

DivisionResult divide_remainder(const MultiPoly& a, const MultiPoly& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.vars() != f.vars()) throw ArityError("polynomials live in different rings");
  const Monomial& lm = f.leading_monomial();
  const Coeff& lc = f.leading_coeff();
  if (!lc.is_constant())
    throw std::domain_error("divisor leading coefficient depends on the formal parameter");
  const Rational inv_lc = 1 / lc.constant();

  MultiPoly q(a.vars()), r(a.vars());
  MultiPoly::Terms work = a.terms();
  auto add = [](MultiPoly::Terms& t, const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };
  MultiPoly::Terms qt, rt;
  while (!work.empty()) {
    auto lead = work.begin();
    const Monomial m = lead->first;
    const Coeff c = lead->second;
    if (lm.divides(m)) {
      const Monomial shift = m - lm;
      const Coeff factor = c * Coeff(inv_lc);
      add(qt, shift, factor);
      for (const auto& [fm, fc] : f.terms()) add(work, fm + shift, -(factor * fc));
    } else {
      add(rt, m, c);
      work.erase(lead);
    }
  }
  for (const auto& [m, c] : qt) q += MultiPoly::monomial(a.vars(), m, c);
  for (const auto& [m, c] : rt) r += MultiPoly::monomial(a.vars(), m, c);
  return {std::move(q), std::move(r)};
}

MultiPoly remainder(const MultiPoly& a, const MultiPoly& f) { return divide_remainder(a, f).remainder; }

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& f) {
  auto [q, r] = divide_remainder(a, f);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const auto vars = m[0][0].vars();
  MultiPoly prev(vars, Coeff(1L));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(vars);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v * Coeff(1 / prev.constant_term().constant())
                                     : divide_exact(v, prev);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

/// Row of a Sylvester-type matrix: coefficients of var^shift * poly, columns
/// indexed from the highest power `width - 1` down to 0.
std::vector<MultiPoly> shifted_row(const std::vector<MultiPoly>& coeffs, int formal_deg, int shift,
                                   int width, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> row(static_cast<std::size_t>(width), MultiPoly(vars));
  for (int pw = 0; pw <= formal_deg; ++pw) {
    const int col = width - 1 - (pw + shift);
    if (pw < static_cast<int>(coeffs.size())) row[static_cast<std::size_t>(col)] = coeffs[pw];
  }
  return row;
}

void check_formal(const MultiPoly& a, std::size_t var, int formal) {
  if (var >= a.arity()) throw ArityError("unknown elimination variable");
  if (a.degree_in(var) > formal) throw std::invalid_argument("formal degree below actual degree");
}

}  // namespace

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var, int formal_deg_a,
                    int formal_deg_b) {
  if (a.vars() != b.vars()) throw ArityError("polynomials live in different rings");
  check_formal(a, var, formal_deg_a);
  check_formal(b, var, formal_deg_b);
  const int m = formal_deg_a, n = formal_deg_b;
  if (m <= 0 && n <= 0) throw std::invalid_argument("resultant of two polynomials constant in the variable");
  const auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  const int width = m + n;
  std::vector<std::vector<MultiPoly>> mat;
  for (int i = 0; i < n; ++i) mat.push_back(shifted_row(ca, m, n - 1 - i, width, a.vars()));
  for (int i = 0; i < m; ++i) mat.push_back(shifted_row(cb, n, m - 1 - i, width, a.vars()));
  return determinant(std::move(mat));
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
  const std::size_t v = a.var_index(var);
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  return resultant(a, b, v, a.degree_in(v), b.degree_in(v));
}

std::pair<MultiPoly, MultiPoly> subresultant1(const MultiPoly& a, const MultiPoly& b,
                                              std::size_t var, int formal_deg_a,
                                              int formal_deg_b) {
  if (a.vars() != b.vars()) throw ArityError("polynomials live in different rings");
  check_formal(a, var, formal_deg_a);
  check_formal(b, var, formal_deg_b);
  const int m = formal_deg_a, n = formal_deg_b;
  if (m < 1 || n < 1) throw std::invalid_argument("subresultant needs positive degrees");
  const auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  auto coeff_at = [&](const std::vector<MultiPoly>& c, int k) {
    return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : MultiPoly(a.vars());
  };
  // A linear input is its own degree-one subresultant.
  if (n == 1) return {coeff_at(cb, 1), coeff_at(cb, 0)};
  if (m == 1) return {coeff_at(ca, 1), coeff_at(ca, 0)};
  const int rows = m + n - 2;
  const int width = m + n - 1;  // powers var^(m+n-2) .. var^0
  std::vector<std::vector<MultiPoly>> full;
  for (int i = 0; i < n - 1; ++i) full.push_back(shifted_row(ca, m, n - 2 - i, width, a.vars()));
  for (int i = 0; i < m - 1; ++i) full.push_back(shifted_row(cb, n, m - 2 - i, width, a.vars()));
  auto pick = [&](int last_col) {
    std::vector<std::vector<MultiPoly>> sub;
    for (const auto& row : full) {
      std::vector<MultiPoly> r(row.begin(), row.begin() + (rows - 1));
      r.push_back(row[static_cast<std::size_t>(last_col)]);
      sub.push_back(std::move(r));
    }
    return determinant(std::move(sub));
  };
  return {pick(width - 2), pick(width - 1)};
}

std::vector<MultiPoly> subresultant(const MultiPoly& a, const MultiPoly& b, std::size_t var,
                                   int formal_deg_a, int formal_deg_b, int j) {
  if (a.vars() != b.vars()) throw ArityError("polynomials live in different rings");
  check_formal(a, var, formal_deg_a);
  check_formal(b, var, formal_deg_b);
  const int m = formal_deg_a, n = formal_deg_b;
  if (j < 0 || j > std::min(m, n)) throw std::invalid_argument("subresultant index out of range");
  const auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  auto padded = [&](const std::vector<MultiPoly>& c, int deg) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(deg) + 1, MultiPoly(a.vars()));
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
    return out;
  };
  if (j == n) return padded(cb, n);
  if (j == m) return padded(ca, m);
  const int width = m + n - j;
  const int lead_cols = m + n - 2 * j - 1;
  std::vector<std::vector<MultiPoly>> full;
  for (int i = 0; i < n - j; ++i) full.push_back(shifted_row(ca, m, n - j - 1 - i, width, a.vars()));
  for (int i = 0; i < m - j; ++i) full.push_back(shifted_row(cb, n, m - j - 1 - i, width, a.vars()));
  std::vector<MultiPoly> out;
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<MultiPoly>> sub;
    for (const auto& row : full) {
      std::vector<MultiPoly> r(row.begin(), row.begin() + lead_cols);
      r.push_back(row[static_cast<std::size_t>(width - 1 - i)]);
      sub.push_back(std::move(r));
    }
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

MultiPoly squarefree_part(const MultiPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  std::size_t var = 0;
  bool found = false;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u.degree_in(i) > 0) {
      if (found) throw ArityError("squarefree_part expects a univariate polynomial");
      var = i;
      found = true;
    }
  }
  const UniPoly p = UniPoly::from_multi(u, var);
  if (p.degree() <= 0) return MultiPoly(u.vars(), Coeff(1L));
  UniPoly q, r;
  UniPoly::divmod(p, gcd(p, p.derivative()), q, r);
  return q.monic().to_multi(u.vars(), var);
}

}  // namespace birkhoff
