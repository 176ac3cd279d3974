#pragma once

// Seeded random elements for the property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weildesc/diffpoly.hpp"

namespace weildesc {

struct ElemBounds {
  std::uint32_t num_degree = 3;
  std::uint32_t den_degree = 3;
  int coeff = 9;
};

struct PolyBounds {
  std::uint32_t degree = 3;
  std::uint32_t order = 2;
  std::size_t max_terms = 4;
  ElemBounds coeff;
};

/// WEILDESC_SEED if set and numeric, else fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }

  /// Each monomial of total degree <= max_degree in m variables is kept with
  /// probability 1/2, coefficient uniform in [-coeff, coeff].
  BasePoly base_poly(std::size_t m, std::uint32_t max_degree, int coeff);
  /// Denominator resampled until nonzero.
  BaseElem base_elem(std::size_t m, const ElemBounds& b = {});
  ExtElem ext_elem(const Extension& e, const ElemBounds& b = {});

  DPolyB dpoly_B(const Extension& e, const std::vector<std::string>& vars, const PolyBounds& b = {});
  DPolyA dpoly_A(const Extension& e, const std::vector<std::string>& vars, const PolyBounds& b = {});

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace weildesc
