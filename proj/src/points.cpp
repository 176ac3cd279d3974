#include "weildesc/points.hpp"

#include "weildesc/error.hpp"

namespace weildesc {

APoint split_point(const BPoint& p, const Extension& e) {
  APoint out;
  for (const auto& [name, value] : p)
    for (std::size_t i = 1; i <= e.dim(); ++i) out.emplace(std::make_pair(name, i), e.lambda(value, i));
  return out;
}

BPoint join_point(const APoint& p, const Extension& e) {
  BPoint out;
  for (const auto& [key, value] : p) {
    auto [it, inserted] = out.try_emplace(key.first, e.zero());
    it->second += value * e.basis(key.second - 1);
  }
  return out;
}

bool CorrespondenceReport::ok() const {
  for (const auto& entry : entries)
    if (!entry.identity_holds || entry.vanishes_over_A != entry.vanishes_over_B) return false;
  return true;
}

CorrespondenceReport check_correspondence(const std::vector<DPolyB>& fs, const BPoint& p, const Extension& e) {
  const std::size_t n = e.base().num_derivations();
  PointB bpoint;
  for (const auto& [name, value] : p) bpoint.emplace(VarRefB{name, DerivIndex::zero(n)}, value);
  PointA apoint;
  for (const auto& [key, value] : split_point(p, e))
    apoint.emplace(VarRefA{key.first, DerivIndex::zero(n), key.second}, value);

  CorrespondenceReport report;
  for (const auto& f : fs) {
    if (max_order(f) > 0) throw Error(ErrorKind::InvalidInput, "correspondence check needs an order-0 system");
    CorrespondenceEntry entry;
    entry.value = eval_B(f, bpoint, e);
    const Components g = unit_expand(f, e);
    for (const auto& gi : g) entry.components.push_back(eval_A(gi, apoint));
    entry.identity_holds = entry.value.coords == entry.components;
    entry.vanishes_over_B = entry.value.is_zero();
    entry.vanishes_over_A = true;
    for (const auto& c : entry.components) entry.vanishes_over_A = entry.vanishes_over_A && c.is_zero();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

// delta^theta(u) with theta applied highest derivation index first.
ExtElem delta_power(const ExtElem& u, const DerivIndex& theta, const Extension& e) {
  ExtElem r = u;
  for (std::size_t k = theta.size(); k-- > 0;)
    for (std::uint32_t m = 0; m < theta[k]; ++m) r = e.delta(r, k);
  return r;
}

BaseElem derive_power(const BaseElem& a, const DerivIndex& theta, const BaseField& base) {
  BaseElem r = a;
  for (std::size_t k = theta.size(); k-- > 0;)
    for (std::uint32_t m = 0; m < theta[k]; ++m) r = base.derive(r, k);
  return r;
}

}  // namespace

DifferentialPointReport check_differential_point(const std::vector<DPolyB>& fs, const std::vector<GeoPoly>& geometric,
                                                 const BPoint& p, const Extension& e) {
  const std::size_t l = e.dim();
  if (geometric.size() != fs.size() * l)
    throw Error(ErrorKind::InvalidInput, "geometric form must have l equations per original equation");

  auto lookup = [&](const std::string& name) -> const ExtElem& {
    auto it = p.find(name);
    if (it == p.end()) throw Error(ErrorKind::UnassignedVariable, "'" + name + "'");
    return it->second;
  };

  DifferentialPointReport report;
  report.original_vanishes = true;
  report.descended_vanishes = true;
  report.coordinates_agree = true;

  for (const auto& f : fs) {
    PointB bpoint;
    for (const auto& v : f.variables()) bpoint.emplace(v, delta_power(lookup(v.name), v.theta, e));
    report.original.push_back(eval_B(f, bpoint, e));
    report.original_vanishes = report.original_vanishes && report.original.back().is_zero();
  }
  for (std::size_t idx = 0; idx < geometric.size(); ++idx) {
    std::map<GeoVar, BaseElem> point;
    for (const auto& v : geometric[idx].variables())
      point.emplace(v, derive_power(e.lambda(lookup(v.name), v.component), v.theta, e.base()));
    report.residuals.push_back(eval_geo(geometric[idx], point));
    report.descended_vanishes = report.descended_vanishes && report.residuals.back().is_zero();
    const ExtElem& orig = report.original[idx / l];
    report.coordinates_agree = report.coordinates_agree && orig.coords[idx % l] == report.residuals.back();
  }
  return report;
}

}  // namespace weildesc
