#include "weildesc/oracle.hpp"

#include <map>
#include <string>
#include <utility>

namespace weildesc {

std::vector<GeoPoly> expand_and_collect(const DPolyB& f, const Extension& e) {
  const std::size_t l = e.dim(), n = e.base().num_derivations();
  std::map<std::string, std::pair<std::string, std::size_t>> back;
  std::map<VarRefB, DPolyB> images;

  auto image = [&](const VarRefB& v) -> DPolyB {
    if (auto it = images.find(v); it != images.end()) return it->second;
    DPolyB p;
    for (std::size_t i = 1; i <= l; ++i) {
      // '#' keeps the fresh names out of the identifier alphabet.
      const std::string y = v.name + "#" + std::to_string(i);
      back[y] = {v.name, i};
      p += DPolyB::term(Monomial<VarRefB>(VarRefB{y, DerivIndex::zero(n)}), e.basis(i - 1));
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::uint32_t m = 0; m < v.theta[k]; ++m) p = natural_derive_B(p, e, k);
    images.emplace(v, p);
    return p;
  };

  const DPolyB expanded = substitute(
      f, DPolyB(), [](const ExtElem& c) { return DPolyB::constant(c); }, image,
      [&](const DPolyB& a, const DPolyB& b) { return mul(a, b, e); });

  std::vector<GeoPoly> out(l);
  for (const auto& [m, c] : expanded.terms()) {
    Monomial<GeoVar> gm;
    for (const auto& [v, exp] : m.factors()) {
      const auto& [x, i] = back.at(v.name);
      gm = gm * Monomial<GeoVar>(GeoVar{x, v.theta, i}, exp);
    }
    for (std::size_t i = 0; i < l; ++i)
      if (!c.coords[i].is_zero()) out[i].add_term(gm, c.coords[i]);
  }
  return out;
}

}  // namespace weildesc
