#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "birkhoff/multipoly.hpp"

namespace birkhoff {

/// Seeded generator of small random polynomials for identity sweeps.
/// Only raw 64-bit engine output is consumed, so a seed reproduces the same
/// polynomials on every platform.
class RandomPolyGen {
 public:
  explicit RandomPolyGen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Small nonzero rational: mostly integers in [-5, 5], sometimes a/b.
  Rational coefficient();
  /// Polynomial with up to `terms` random monomials of total degree <= max_degree.
  MultiPoly poly(const std::vector<std::string>& vars, unsigned max_degree, unsigned terms);
  /// Homogeneous polynomial of exactly the given degree (never zero).
  MultiPoly homogeneous(const std::vector<std::string>& vars, unsigned degree, unsigned terms);
  /// Nonzero polynomial with degree in [1, max_degree].
  MultiPoly nonconstant(const std::vector<std::string>& vars, unsigned max_degree, unsigned terms);

 private:
  std::mt19937_64 rng_;
};

}  // namespace birkhoff
