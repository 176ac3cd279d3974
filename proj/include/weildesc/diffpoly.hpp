#pragma once

// Differential polynomial rings B{T} (variables t_theta) and
// W(B{T}) = A[t_theta(i)] (descended variables), plus the geometric ring A{y}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weildesc/extension.hpp"
#include "weildesc/sparse_poly.hpp"

namespace weildesc {

/// Commuting multi-index of derivative operators, one slot per base derivation.
class DerivIndex {
 public:
  DerivIndex() = default;
  explicit DerivIndex(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {}
  static DerivIndex zero(std::size_t n) { return DerivIndex(std::vector<std::uint32_t>(n, 0)); }

  std::size_t size() const { return orders_.size(); }
  std::uint32_t operator[](std::size_t k) const { return orders_[k]; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint32_t order() const;
  bool is_zero() const { return order() == 0; }

  DerivIndex incremented(std::size_t k) const;
  DerivIndex decremented(std::size_t k) const;

  friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
  /// By total order, then lexicographically.
  friend bool operator<(const DerivIndex& a, const DerivIndex& b);

 private:
  std::vector<std::uint32_t> orders_;
};

/// All multi-indices of length n with total order <= max_order, in DerivIndex order.
std::vector<DerivIndex> indices_up_to(std::size_t n, std::uint32_t max_order);

/// t_theta in B{T}.
struct VarRefB {
  std::string name;
  DerivIndex theta;

  friend bool operator==(const VarRefB&, const VarRefB&) = default;
  friend bool operator<(const VarRefB& a, const VarRefB& b);
};

/// t_theta(i) in W(B{T}); component is 1-based.
struct VarRefA {
  std::string name;
  DerivIndex theta;
  std::size_t component = 1;

  friend bool operator==(const VarRefA&, const VarRefA&) = default;
  friend bool operator<(const VarRefA& a, const VarRefA& b);
};

/// The theta-th base derivative of the fresh variable y_{name,component}.
struct GeoVar {
  std::string name;
  DerivIndex theta;
  std::size_t component = 1;

  friend bool operator==(const GeoVar&, const GeoVar&) = default;
  friend bool operator<(const GeoVar& a, const GeoVar& b);
};

using DPolyB = SparsePoly<VarRefB, ExtElem>;
using DPolyA = SparsePoly<VarRefA, BaseElem>;
using GeoPoly = SparsePoly<GeoVar, BaseElem>;
/// A{T}: differential polynomials over A in the plain variables t_theta.
using APoly = SparsePoly<VarRefB, BaseElem>;

DPolyB dpoly_constant(const ExtElem& c);
DPolyB dpoly_var(const Extension& e, VarRefB v);
DPolyA dpoly_var(VarRefA v);
DPolyB mul(const DPolyB& f, const DPolyB& g, const Extension& e);
DPolyB pow(const DPolyB& f, unsigned n, const Extension& e);
/// Multiply every coefficient by u in B.
DPolyB scale(const DPolyB& f, const ExtElem& u, const Extension& e);

/// Natural derivation: t_theta -> t_{theta+e_k}, ext_delta on coefficients.
DPolyB natural_derive_B(const DPolyB& f, const Extension& e, std::size_t k);
DPolyB natural_derive_B(const DPolyB& f, const Extension& e, const std::string& k);
/// Natural derivation of A{y}: y_theta -> y_{theta+e_k}, d_k on coefficients.
GeoPoly natural_derive(const GeoPoly& f, const BaseField& base, std::size_t k);
APoly natural_derive(const APoly& f, const BaseField& base, std::size_t k);

/// Highest total derivative order of any variable in f.
std::uint32_t max_order(const DPolyB& f);

using PointB = std::map<VarRefB, ExtElem>;
using PointA = std::map<VarRefA, BaseElem>;
/// Throws UnassignedVariable.
ExtElem eval_B(const DPolyB& f, const PointB& point, const Extension& e);
BaseElem eval_A(const DPolyA& g, const PointA& point);
BaseElem eval_geo(const GeoPoly& g, const std::map<GeoVar, BaseElem>& point);

/// Expression-grammar rendering: t_theta as nested derivation applications,
/// e.g. d1(d1(d2(x))).
std::string render_var(const VarRefB& v, const BaseField& base);
/// Raw descended variable name, e.g. x.2@[1].
std::string render_var(const VarRefA& v);
/// y_{x,2} with theta applied, e.g. d(x_2).
std::string render_var(const GeoVar& v, const BaseField& base);

std::string render(const DPolyB& f, const Extension& e);
std::string render(const DPolyA& g, const BaseField& base);
std::string render(const GeoPoly& g, const BaseField& base);
std::string render(const APoly& g, const BaseField& base);

}  // namespace weildesc
