#include "birkhoff/random_poly.hpp"

namespace birkhoff {

long RandomPolyGen::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational RandomPolyGen::coefficient() {
  long num = 0;
  while (num == 0) num = uniform(-5, 5);
  if (uniform(0, 3) == 0) return make_rational(num, uniform(2, 4));
  return Rational(num);
}

namespace {

Monomial random_monomial(RandomPolyGen& gen, std::size_t arity, unsigned degree) {
  Monomial m;
  for (unsigned k = 0; k < degree; ++k) m.e[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(arity) - 1))] += 1;
  return m;
}

}  // namespace

MultiPoly RandomPolyGen::poly(const std::vector<std::string>& vars, unsigned max_degree,
                              unsigned terms) {
  MultiPoly r(vars);
  for (unsigned t = 0; t < terms; ++t) {
    const auto d = static_cast<unsigned>(uniform(0, max_degree));
    r += MultiPoly::monomial(vars, random_monomial(*this, vars.size(), d), Coeff(coefficient()));
  }
  return r;
}

MultiPoly RandomPolyGen::homogeneous(const std::vector<std::string>& vars, unsigned degree,
                                     unsigned terms) {
  MultiPoly r(vars);
  while (r.is_zero()) {
    for (unsigned t = 0; t < terms; ++t)
      r += MultiPoly::monomial(vars, random_monomial(*this, vars.size(), degree), Coeff(coefficient()));
  }
  return r;
}

MultiPoly RandomPolyGen::nonconstant(const std::vector<std::string>& vars, unsigned max_degree,
                                     unsigned terms) {
  for (;;) {
    MultiPoly r = poly(vars, max_degree, terms);
    if (r.degree() >= 1) return r;
  }
}

}  // namespace birkhoff
