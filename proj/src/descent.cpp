#include "weildesc/descent.hpp"

#include <algorithm>
#include <set>

#include "weildesc/error.hpp"

namespace weildesc {

namespace {

void check_derivation(const Extension& e, std::size_t k) {
  if (k >= e.base().num_derivations())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
}

Components constant_components(const ExtElem& c) {
  Components r(c.coords.size());
  for (std::size_t i = 0; i < c.coords.size(); ++i) r[i] = DPolyA::constant(c.coords[i]);
  return r;
}

Components variable_components(const VarRefB& v, std::size_t ell) {
  Components r;
  r.reserve(ell);
  for (std::size_t i = 1; i <= ell; ++i) r.push_back(dpoly_var(VarRefA{v.name, v.theta, i}));
  return r;
}

}  // namespace

Components comp_mul(const Components& f, const Components& g, const Extension& e) {
  const std::size_t l = e.dim();
  Components r(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (g[j].is_zero()) continue;
      const DPolyA p = f[i] * g[j];
      for (std::size_t k = 0; k < l; ++k)
        if (!e.c(i, j, k).is_zero()) r[k] += scale(p, e.c(i, j, k));
    }
  }
  return r;
}

Components unit_expand(const DPolyB& f, const Extension& e) {
  const std::size_t l = e.dim();
  Components r(l);
  std::map<VarRefB, Components> images;
  for (const auto& [m, c] : f.terms()) {
    Components t = constant_components(c);
    for (const auto& [v, exp] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, variable_components(v, l)).first;
      for (std::uint32_t n = 0; n < exp; ++n) t = comp_mul(t, it->second, e);
    }
    for (std::size_t i = 0; i < l; ++i) r[i] += t[i];
  }
  return r;
}

// ---------------------------------------------------------------- descent derivations

DescentDerivation DescentDerivation::basic(const Extension& e, std::size_t k) {
  check_derivation(e, k);
  DescentDerivation d;
  d.weights.assign(e.base().num_derivations(), BaseElem());
  d.weights[k] = BaseElem(1);
  d.base_images = e.base().derivations()[k].images;
  d.scalars = e.derivation_matrix(k);
  return d;
}

DescentDerivation DescentDerivation::combination(const Extension& e, const std::vector<BaseElem>& coeffs) {
  const std::size_t n = e.base().num_derivations();
  if (coeffs.size() != n) throw Error(ErrorKind::IndexOutOfRange, "one coefficient per derivation expected");
  DescentDerivation d;
  d.weights = coeffs;
  d.base_images.assign(e.base().num_vars(), BaseElem());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < e.base().num_vars(); ++j)
      d.base_images[j] += coeffs[k] * e.base().derivations()[k].images[j];

  const std::size_t l = e.dim();
  d.scalars.assign(l, std::vector<BaseElem>(l));
  for (std::size_t j = 0; j < l; ++j) {
    ExtElem image = e.zero();
    for (std::size_t k = 0; k < n; ++k)
      if (!coeffs[k].is_zero()) image += coeffs[k] * e.delta(e.basis(j), k);
    for (std::size_t i = 0; i < l; ++i) d.scalars[i][j] = image.coords[i];
  }
  return d;
}

DPolyA descent_derivation_var(const DescentDerivation& d, const VarRefA& v, std::size_t ell) {
  if (v.component < 1 || v.component > ell)
    throw Error(ErrorKind::IndexOutOfRange, "component " + std::to_string(v.component));
  if (v.theta.size() != d.weights.size())
    throw Error(ErrorKind::IndexOutOfRange, "derivative index has the wrong length");
  DPolyA r;
  for (std::size_t k = 0; k < d.weights.size(); ++k)
    if (!d.weights[k].is_zero())
      r.add_term(Monomial<VarRefA>(VarRefA{v.name, v.theta.incremented(k), v.component}), d.weights[k]);
  for (std::size_t j = 0; j < ell; ++j) {
    const BaseElem& s = d.scalars[v.component - 1][j];
    if (!s.is_zero()) r.add_term(Monomial<VarRefA>(VarRefA{v.name, v.theta, j + 1}), -s);
  }
  return r;
}

DPolyA descent_derivation_var(const Extension& e, const std::string& name, const DerivIndex& theta,
                              std::size_t i, std::size_t k) {
  return descent_derivation_var(DescentDerivation::basic(e, k), VarRefA{name, theta, i}, e.dim());
}

DPolyA descent_derivation_var(const Extension& e, const std::string& name, const DerivIndex& theta,
                              std::size_t i, const std::string& k) {
  return descent_derivation_var(e, name, theta, i, e.base().derivation_index(k));
}

DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, const DescentDerivation& d) {
  const BaseField& base = e.base();
  return leibniz_derive(
      g, [&](const BaseElem& c) { return base.derive_with_images(c, d.base_images); },
      [&](const VarRefA& v) { return descent_derivation_var(d, v, e.dim()); },
      [](const DPolyA& a, const DPolyA& b) { return a * b; });
}

DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, std::size_t k) {
  return apply_descent_derivation(g, e, DescentDerivation::basic(e, k));
}

DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, const std::string& k) {
  return apply_descent_derivation(g, e, e.base().derivation_index(k));
}

// ---------------------------------------------------------------- systems

DescendedSystem descend_system(const std::vector<DPolyB>& fs, const Extension& e,
                               const std::vector<std::string>& vars) {
  const std::set<std::string> declared(vars.begin(), vars.end());
  const std::size_t n = e.base().num_derivations();
  DescendedSystem sys;
  sys.input_vars = vars;
  sys.ell = e.dim();

  std::uint32_t top = 0;
  for (std::size_t q = 0; q < fs.size(); ++q) {
    for (const auto& v : fs[q].variables()) {
      if (!declared.count(v.name))
        throw Error(ErrorKind::InvalidInput, "equation " + std::to_string(q + 1) + " uses undeclared variable '" +
                                                 v.name + "'");
      if (v.theta.size() != n) throw Error(ErrorKind::InvalidInput, "derivative index has the wrong length");
    }
    top = std::max(top, max_order(fs[q]));
    Components comps = unit_expand(fs[q], e);
    for (std::size_t i = 0; i < comps.size(); ++i) sys.generators.push_back({q + 1, i + 1, std::move(comps[i])});
  }

  sys.table_order = top + 1;
  const auto thetas = indices_up_to(n, sys.table_order);
  for (std::size_t k = 0; k < n; ++k) {
    const DescentDerivation d = DescentDerivation::basic(e, k);
    for (const auto& name : vars)
      for (const auto& theta : thetas)
        for (std::size_t i = 1; i <= e.dim(); ++i) {
          VarRefA v{name, theta, i};
          DPolyA value = descent_derivation_var(d, v, e.dim());
          sys.derivation_table.push_back({k, std::move(v), std::move(value)});
        }
  }
  return sys;
}

// ---------------------------------------------------------------- geometric form

GeometricRewriter::GeometricRewriter(const Extension& e) : ext_(e), scalars_(e.derivation_matrices()) {}

GeometricRewriter::GeometricRewriter(const Extension& e, std::vector<BaseMatrix> scalars)
    : ext_(e), scalars_(std::move(scalars)) {}

// G(t_{theta+e_k}(i)) = d_k G(t_theta(i)) + sum_j scalars_k[i][j] G(t_theta(j))
GeoPoly GeometricRewriter::step(std::size_t component, std::size_t k, const std::vector<GeoPoly>& prev_images) const {
  GeoPoly r = natural_derive(prev_images[component - 1], ext_.base(), k);
  for (std::size_t j = 0; j < ext_.dim(); ++j) {
    const BaseElem& s = scalars_[k][component - 1][j];
    if (!s.is_zero()) r += scale(prev_images[j], s);
  }
  return r;
}

const GeoPoly& GeometricRewriter::image(const VarRefA& v) {
  if (auto it = memo_.find(v); it != memo_.end()) return it->second;
  if (v.component < 1 || v.component > ext_.dim())
    throw Error(ErrorKind::IndexOutOfRange, "component " + std::to_string(v.component));
  GeoPoly result;
  if (v.theta.is_zero()) {
    result = GeoPoly::term(Monomial<GeoVar>(GeoVar{v.name, v.theta, v.component}), BaseElem(1));
  } else {
    std::size_t k = 0;
    while (v.theta[k] == 0) ++k;
    const DerivIndex prev = v.theta.decremented(k);
    std::vector<GeoPoly> prev_images;
    for (std::size_t j = 1; j <= ext_.dim(); ++j) prev_images.push_back(image(VarRefA{v.name, prev, j}));
    result = step(v.component, k, prev_images);
  }
  return memo_.emplace(v, std::move(result)).first->second;
}

GeoPoly GeometricRewriter::image_along(const std::string& name, std::size_t component,
                                       const std::vector<std::size_t>& path) {
  const std::size_t n = ext_.base().num_derivations();
  DerivIndex theta = DerivIndex::zero(n);
  std::vector<GeoPoly> imgs;
  for (std::size_t j = 1; j <= ext_.dim(); ++j)
    imgs.push_back(GeoPoly::term(Monomial<GeoVar>(GeoVar{name, theta, j}), BaseElem(1)));
  for (std::size_t k : path) {
    if (k >= n) throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
    std::vector<GeoPoly> next;
    for (std::size_t j = 1; j <= ext_.dim(); ++j) next.push_back(step(j, k, imgs));
    imgs = std::move(next);
    theta = theta.incremented(k);
  }
  return imgs.at(component - 1);
}

GeoPoly GeometricRewriter::rewrite(const DPolyA& g) {
  return substitute(
      g, GeoPoly(), [](const BaseElem& c) { return GeoPoly::constant(c); },
      [&](const VarRefA& v) { return image(v); }, [](const GeoPoly& a, const GeoPoly& b) { return a * b; });
}

std::vector<GeoPoly> to_geometric_form(const DescendedSystem& sys, const Extension& e,
                                       std::vector<BaseMatrix> scalars) {
  if (e.base().num_derivations() > 1) {
    if (auto w = e.commutation_witness())
      throw Error(ErrorKind::NonCommutingDerivations, e.base().derivation_name((*w)[0]) + " and " +
                                                          e.base().derivation_name((*w)[1]) + " do not commute");
  }
  GeometricRewriter rw(e, std::move(scalars));
  std::vector<GeoPoly> out;
  out.reserve(sys.generators.size());
  for (const auto& g : sys.generators) out.push_back(rw.rewrite(g.poly));
  return out;
}

std::vector<GeoPoly> to_geometric_form(const DescendedSystem& sys, const Extension& e) {
  return to_geometric_form(sys, e, e.derivation_matrices());
}

std::vector<BaseMatrix> printed_form_scalars(const Extension& e) {
  BaseMatrix id(e.dim(), std::vector<BaseElem>(e.dim()));
  for (std::size_t i = 0; i < e.dim(); ++i) id[i][i] = BaseElem(1);
  return std::vector<BaseMatrix>(e.base().num_derivations(), id);
}

// ---------------------------------------------------------------- law checks

ProlongationCheck check_prolongation_identity(const DPolyB& f, const Extension& e, std::size_t k,
                                              const DescentDerivation& d, const BaseMatrix& correction) {
  const Components lhs = unit_expand(natural_derive_B(f, e, k), e);
  const Components g = unit_expand(f, e);
  for (std::size_t i = 0; i < e.dim(); ++i) {
    DPolyA rhs = apply_descent_derivation(g[i], e, d);
    for (std::size_t j = 0; j < e.dim(); ++j)
      if (!correction[i][j].is_zero()) rhs += scale(g[j], correction[i][j]);
    if (!(lhs[i] == rhs)) {
      const BaseField& base = e.base();
      return {false, i + 1, "lhs " + render(lhs[i], base) + " vs rhs " + render(rhs, base)};
    }
  }
  return {};
}

ProlongationCheck check_prolongation_identity(const DPolyB& f, const Extension& e, std::size_t k) {
  return check_prolongation_identity(f, e, k, DescentDerivation::basic(e, k), e.derivation_matrix(k));
}

bool check_bracket(const Extension& e, std::size_t k1, std::size_t k2, const DPolyA& sample,
                   const std::vector<BaseElem>* structure) {
  check_derivation(e, k1);
  check_derivation(e, k2);
  const BaseField& base = e.base();
  const std::size_t n = base.num_derivations();
  std::vector<BaseElem> a = structure ? *structure : std::vector<BaseElem>(n);
  if (a.size() != n) throw Error(ErrorKind::BracketNotInFamily, "one structure coefficient per derivation expected");

  const auto images = base.bracket_images(k1, k2);
  for (std::size_t j = 0; j < images.size(); ++j) {
    BaseElem expected;
    for (std::size_t k = 0; k < n; ++k) expected += a[k] * base.derivations()[k].images[j];
    if (!(images[j] == expected))
      throw Error(ErrorKind::BracketNotInFamily, "bracket on A differs at " + base.var_names()[j]);
  }
  for (std::size_t j = 0; j < e.dim(); ++j) {
    const ExtElem b = e.basis(j);
    const ExtElem lhs = e.delta(e.delta(b, k2), k1) - e.delta(e.delta(b, k1), k2);
    ExtElem expected = e.zero();
    for (std::size_t k = 0; k < n; ++k) expected += a[k] * e.delta(b, k);
    if (!(lhs == expected))
      throw Error(ErrorKind::BracketNotInFamily, "bracket on B differs at basis element " + std::to_string(j + 1));
  }
  for (const auto& x : a)
    if (!x.is_zero())
      throw Error(ErrorKind::BracketNotInFamily, "derivative indices are commutative; nonzero structure coefficients "
                                                 "are not representable");

  const DPolyA lhs = apply_descent_derivation(apply_descent_derivation(sample, e, k2), e, k1) -
                     apply_descent_derivation(apply_descent_derivation(sample, e, k1), e, k2);
  DPolyA rhs;
  for (std::size_t k = 0; k < n; ++k)
    if (!a[k].is_zero()) rhs += scale(apply_descent_derivation(sample, e, k), a[k]);
  return lhs == rhs;
}

bool check_linearity(const Extension& e, const BaseElem& a1, const BaseElem& a2, std::size_t k1, std::size_t k2,
                     const DPolyA& sample) {
  check_derivation(e, k1);
  check_derivation(e, k2);
  std::vector<BaseElem> coeffs(e.base().num_derivations());
  coeffs[k1] += a1;
  coeffs[k2] += a2;
  const DPolyA lhs = apply_descent_derivation(sample, e, DescentDerivation::combination(e, coeffs));
  const DPolyA rhs =
      scale(apply_descent_derivation(sample, e, k1), a1) + scale(apply_descent_derivation(sample, e, k2), a2);
  return lhs == rhs;
}

APoly counit_poly(const DPolyA& g, const Extension& e) {
  const auto& u = e.unit_coords();
  return substitute(
      g, APoly(), [](const BaseElem& c) { return APoly::constant(c); },
      [&](const VarRefA& v) {
        if (v.component < 1 || v.component > u.size())
          throw Error(ErrorKind::IndexOutOfRange, "component " + std::to_string(v.component));
        return APoly::term(Monomial<VarRefB>(VarRefB{v.name, v.theta}), u[v.component - 1]);
      },
      [](const APoly& a, const APoly& b) { return a * b; });
}

// ---------------------------------------------------------------- morphisms

DPolyA MorphismDescent::apply(const DPolyA& g) const {
  return substitute(
      g, DPolyA(), [](const BaseElem& c) { return DPolyA::constant(c); },
      [&](const VarRefA& v) -> const DPolyA& {
        auto it = images_.find(v);
        if (it == images_.end()) throw Error(ErrorKind::UnassignedVariable, render_var(v));
        return it->second;
      },
      [](const DPolyA& a, const DPolyA& b) { return a * b; });
}

MorphismDescent descend_morphism(const std::map<std::string, DPolyB>& images, const Extension& e,
                                 const std::vector<std::string>& source_vars, std::uint32_t max_order) {
  const std::size_t n = e.base().num_derivations();
  const auto thetas = indices_up_to(n, max_order);
  std::map<VarRefA, DPolyA> out;
  for (const auto& name : source_vars) {
    auto it = images.find(name);
    if (it == images.end()) throw Error(ErrorKind::UnassignedVariable, "no image for '" + name + "'");
    // d^theta of the image, built by extending already computed lower indices.
    std::map<DerivIndex, DPolyB> derived;
    for (const auto& theta : thetas) {
      DPolyB img;
      if (theta.is_zero()) {
        img = it->second;
      } else {
        std::size_t k = 0;
        while (theta[k] == 0) ++k;
        img = natural_derive_B(derived.at(theta.decremented(k)), e, k);
      }
      Components comps = unit_expand(img, e);
      for (std::size_t i = 0; i < comps.size(); ++i) out.emplace(VarRefA{name, theta, i + 1}, std::move(comps[i]));
      derived.emplace(theta, std::move(img));
    }
  }
  return MorphismDescent(std::move(out));
}

}  // namespace weildesc
