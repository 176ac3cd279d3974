#pragma once

// Property suites run by `weildesc check`: each draws seeded random samples,
// checks one family of laws exactly, and shrinks the first failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weildesc/points.hpp"
#include "weildesc/random.hpp"

namespace weildesc {

struct SuiteResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  std::string witness;             // set on failure
  std::vector<std::string> notes;  // informational lines
};

struct CheckContext {
  const Extension* ext = nullptr;
  std::vector<std::string> vars;
  std::vector<DPolyB> equations;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<BPoint> point;
  PolyBounds bounds{3, 2, 4, ElemBounds{}};
  /// Pairs are multiplied out, so the ring-hom suite uses lower degrees.
  PolyBounds pair_bounds{2, 2, 3, ElemBounds{1, 1, 9}};
};

SuiteResult suite_validate(const CheckContext& ctx);
SuiteResult suite_commuting_square(const CheckContext& ctx);
SuiteResult suite_ring_hom(const CheckContext& ctx);
SuiteResult suite_bracket_linearity(const CheckContext& ctx);
SuiteResult suite_oracle(const CheckContext& ctx);
SuiteResult suite_correspondence(const CheckContext& ctx);

/// All suites in the order above; once validation fails the rest are skipped.
std::vector<SuiteResult> run_check_suites(const CheckContext& ctx);

/// Greedily drops terms of f while fails(f) still holds.
template <class Poly, class Fails>
Poly shrink_terms(Poly f, Fails&& fails) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [m, c] : f.terms()) {
      Poly g;
      for (const auto& [m2, c2] : f.terms())
        if (!(m2 == m)) g.add_term(m2, c2);
      if (!g.is_zero() && fails(g)) {
        f = std::move(g);
        changed = true;
        break;
      }
    }
  }
  return f;
}

}  // namespace weildesc
