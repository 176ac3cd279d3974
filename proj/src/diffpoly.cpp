#include "weildesc/diffpoly.hpp"

#include <algorithm>

#include "weildesc/error.hpp"

namespace weildesc {

// ---------------------------------------------------------------- indices

std::uint32_t DerivIndex::order() const {
  std::uint32_t s = 0;
  for (auto o : orders_) s += o;
  return s;
}

DerivIndex DerivIndex::incremented(std::size_t k) const {
  if (k >= orders_.size()) throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  DerivIndex r = *this;
  ++r.orders_[k];
  return r;
}

DerivIndex DerivIndex::decremented(std::size_t k) const {
  if (k >= orders_.size() || orders_[k] == 0)
    throw Error(ErrorKind::IndexOutOfRange, "cannot lower derivative index");
  DerivIndex r = *this;
  --r.orders_[k];
  return r;
}

bool operator<(const DerivIndex& a, const DerivIndex& b) {
  const auto oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  return a.orders_ < b.orders_;
}

std::vector<DerivIndex> indices_up_to(std::size_t n, std::uint32_t max_order) {
  std::vector<DerivIndex> out;
  std::vector<std::uint32_t> cur(n, 0);
  // Odometer over [0, max_order]^n, keeping those within the total bound.
  for (;;) {
    DerivIndex d(cur);
    if (d.order() <= max_order) out.push_back(d);
    std::size_t k = 0;
    while (k < n && ++cur[k] > max_order) cur[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator<(const VarRefB& a, const VarRefB& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.theta < b.theta;
}

bool operator<(const VarRefA& a, const VarRefA& b) {
  if (a.name != b.name) return a.name < b.name;
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.component < b.component;
}

bool operator<(const GeoVar& a, const GeoVar& b) {
  if (a.name != b.name) return a.name < b.name;
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.component < b.component;
}

// ---------------------------------------------------------------- arithmetic

DPolyB dpoly_constant(const ExtElem& c) { return DPolyB::constant(c); }

DPolyB dpoly_var(const Extension& e, VarRefB v) { return DPolyB::term(Monomial<VarRefB>(std::move(v)), e.one()); }

DPolyA dpoly_var(VarRefA v) { return DPolyA::term(Monomial<VarRefA>(std::move(v)), BaseElem(1)); }

DPolyB mul(const DPolyB& f, const DPolyB& g, const Extension& e) {
  return multiply(f, g, [&](const ExtElem& a, const ExtElem& b) { return e.mul(a, b); });
}

DPolyB pow(const DPolyB& f, unsigned n, const Extension& e) {
  DPolyB r = dpoly_constant(e.one()), base = f;
  while (n > 0) {
    if (n & 1u) r = mul(r, base, e);
    n >>= 1u;
    if (n > 0) base = mul(base, base, e);
  }
  return r;
}

DPolyB scale(const DPolyB& f, const ExtElem& u, const Extension& e) {
  return f.map_coefficients([&](const ExtElem& c) { return e.mul(u, c); });
}

DPolyB natural_derive_B(const DPolyB& f, const Extension& e, std::size_t k) {
  if (k >= e.base().num_derivations())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return leibniz_derive(
      f, [&](const ExtElem& c) { return e.delta(c, k); },
      [&](const VarRefB& v) { return dpoly_var(e, VarRefB{v.name, v.theta.incremented(k)}); },
      [&](const DPolyB& a, const DPolyB& b) { return mul(a, b, e); });
}

DPolyB natural_derive_B(const DPolyB& f, const Extension& e, const std::string& k) {
  return natural_derive_B(f, e, e.base().derivation_index(k));
}

GeoPoly natural_derive(const GeoPoly& f, const BaseField& base, std::size_t k) {
  if (k >= base.num_derivations())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return leibniz_derive(
      f, [&](const BaseElem& c) { return base.derive(c, k); },
      [&](const GeoVar& v) {
        return GeoPoly::term(Monomial<GeoVar>(GeoVar{v.name, v.theta.incremented(k), v.component}), BaseElem(1));
      },
      [](const GeoPoly& a, const GeoPoly& b) { return a * b; });
}

APoly natural_derive(const APoly& f, const BaseField& base, std::size_t k) {
  if (k >= base.num_derivations())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return leibniz_derive(
      f, [&](const BaseElem& c) { return base.derive(c, k); },
      [&](const VarRefB& v) {
        return APoly::term(Monomial<VarRefB>(VarRefB{v.name, v.theta.incremented(k)}), BaseElem(1));
      },
      [](const APoly& a, const APoly& b) { return a * b; });
}

std::uint32_t max_order(const DPolyB& f) {
  std::uint32_t m = 0;
  for (const auto& v : f.variables()) m = std::max(m, v.theta.order());
  return m;
}

// ---------------------------------------------------------------- evaluation

ExtElem eval_B(const DPolyB& f, const PointB& point, const Extension& e) {
  return substitute(
      f, e.zero(), [](const ExtElem& c) { return c; },
      [&](const VarRefB& v) -> const ExtElem& {
        auto it = point.find(v);
        if (it == point.end()) throw Error(ErrorKind::UnassignedVariable, render_var(v, e.base()));
        return it->second;
      },
      [&](const ExtElem& a, const ExtElem& b) { return e.mul(a, b); });
}

namespace {

struct BaseAcc {
  BaseElem value;
  BaseAcc& operator+=(const BaseAcc& o) {
    value += o.value;
    return *this;
  }
};

}  // namespace

BaseElem eval_A(const DPolyA& g, const PointA& point) {
  return substitute(
             g, BaseAcc{}, [](const BaseElem& c) { return BaseAcc{c}; },
             [&](const VarRefA& v) {
               auto it = point.find(v);
               if (it == point.end()) throw Error(ErrorKind::UnassignedVariable, render_var(v));
               return BaseAcc{it->second};
             },
             [](const BaseAcc& a, const BaseAcc& b) { return BaseAcc{a.value * b.value}; })
      .value;
}

BaseElem eval_geo(const GeoPoly& g, const std::map<GeoVar, BaseElem>& point) {
  return substitute(
             g, BaseAcc{}, [](const BaseElem& c) { return BaseAcc{c}; },
             [&](const GeoVar& v) {
               auto it = point.find(v);
               if (it == point.end())
                 throw Error(ErrorKind::UnassignedVariable, v.name + "_" + std::to_string(v.component));
               return BaseAcc{it->second};
             },
             [](const BaseAcc& a, const BaseAcc& b) { return BaseAcc{a.value * b.value}; })
      .value;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string apply_theta(std::string inner, const DerivIndex& theta, const BaseField& base) {
  for (std::size_t k = theta.size(); k-- > 0;)
    for (std::uint32_t n = 0; n < theta[k]; ++n) inner = base.derivation_name(k) + "(" + inner + ")";
  return inner;
}

template <class Poly, class VarRender>
std::string render_base_coeff(const Poly& p, const BaseField& base, VarRender&& rv) {
  return render_poly(p, rv, [&](std::string& out, const BaseElem& c, const std::string& mono) {
    append_term(out, c, mono, base.var_names());
  });
}

}  // namespace

std::string render_var(const VarRefB& v, const BaseField& base) { return apply_theta(v.name, v.theta, base); }

std::string render_var(const VarRefA& v) {
  std::string s = v.name + "." + std::to_string(v.component) + "@[";
  for (std::size_t k = 0; k < v.theta.size(); ++k) s += (k ? "," : "") + std::to_string(v.theta[k]);
  return s + "]";
}

std::string render_var(const GeoVar& v, const BaseField& base) {
  return apply_theta(v.name + "_" + std::to_string(v.component), v.theta, base);
}

std::string render(const DPolyB& f, const Extension& e) {
  const auto& names = e.basis_names();
  return render_poly(
      f, [&](const VarRefB& v) { return render_var(v, e.base()); },
      [&](std::string& out, const ExtElem& c, const std::string& mono) {
        std::size_t nonzero = 0, idx = 0;
        for (std::size_t i = 0; i < c.coords.size(); ++i)
          if (!c.coords[i].is_zero()) {
            ++nonzero;
            idx = i;
          }
        if (nonzero == 1) {
          std::string m = names[idx] == "1" ? std::string() : names[idx];
          if (!mono.empty()) m = m.empty() ? mono : m + "*" + mono;
          append_term(out, c.coords[idx], m, e.base().var_names());
          return;
        }
        if (!out.empty()) out += " + ";
        out += "(" + e.render(c) + ")";
        if (!mono.empty()) out += "*" + mono;
      });
}

std::string render(const DPolyA& g, const BaseField& base) {
  return render_base_coeff(g, base, [](const VarRefA& v) { return render_var(v); });
}

std::string render(const GeoPoly& g, const BaseField& base) {
  return render_base_coeff(g, base, [&](const GeoVar& v) { return render_var(v, base); });
}

std::string render(const APoly& g, const BaseField& base) {
  return render_base_coeff(g, base, [&](const VarRefB& v) { return render_var(v, base); });
}

}  // namespace weildesc
