#pragma once

// Differential Weil descent of systems over B{T} to W(B{T}) = A[t_theta(i)].

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weildesc/diffpoly.hpp"

namespace weildesc {

/// An element of W(B{T}) (x) B in coordinates: component i is lambda_i.
using Components = std::vector<DPolyA>;

Components comp_mul(const Components& f, const Components& g, const Extension& e);

/// W_{B{T}}: substitutes t_theta -> sum_i t_theta(i) b_i, expands through the
/// structure constants and returns the l coordinate components.
Components unit_expand(const DPolyB& f, const Extension& e);

/// The data of a derivation D = sum_k w_k d_k of the family, as the descent
/// needs it: its action on derivative indices, its values on the base
/// variables, and the scalars lambda_i(delta_D b_j).
struct DescentDerivation {
  std::vector<BaseElem> weights;
  std::vector<BaseElem> base_images;
  BaseMatrix scalars;

  static DescentDerivation basic(const Extension& e, std::size_t k);
  /// D = sum_k coeffs[k] d_k, with delta_D computed through ext_delta.
  static DescentDerivation combination(const Extension& e, const std::vector<BaseElem>& coeffs);
};

/// d^W(t_theta(i)) = t_{theta+e_k}(i) - sum_j lambda_i(delta_k b_j) t_theta(j).
DPolyA descent_derivation_var(const Extension& e, const std::string& name, const DerivIndex& theta,
                              std::size_t i, std::size_t k);
DPolyA descent_derivation_var(const Extension& e, const std::string& name, const DerivIndex& theta,
                              std::size_t i, const std::string& k);
DPolyA descent_derivation_var(const DescentDerivation& d, const VarRefA& v, std::size_t ell);

DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, std::size_t k);
DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, const std::string& k);
DPolyA apply_descent_derivation(const DPolyA& g, const Extension& e, const DescentDerivation& d);

struct Generator {
  std::size_t equation;   // 1-based
  std::size_t component;  // 1-based
  DPolyA poly;
};

struct TableEntry {
  std::size_t derivation;  // 0-based index into the base derivations
  VarRefA var;
  DPolyA value;
};

struct DescendedSystem {
  std::vector<std::string> input_vars;
  std::size_t ell = 0;
  std::vector<Generator> generators;
  std::vector<TableEntry> derivation_table;
  /// Table covers every t_theta(i) with |theta| <= table_order.
  std::uint32_t table_order = 0;
};

/// Generators are the lambda-components of each equation in (equation,
/// component) order; the table covers one prolongation level past the
/// highest order present. Throws InvalidInput for undeclared variables.
DescendedSystem descend_system(const std::vector<DPolyB>& fs, const Extension& e,
                               const std::vector<std::string>& vars);

/// Rewrites descended variables into base derivatives of y_{name,i}.
class GeometricRewriter {
 public:
  /// Uses the extension's own lambda-scalars.
  explicit GeometricRewriter(const Extension& e);
  /// Uses scalars[k][i][j] in place of lambda_i(delta_k b_j).
  GeometricRewriter(const Extension& e, std::vector<BaseMatrix> scalars);

  /// Image of t_theta(i), peeling derivations off theta lowest index first.
  const GeoPoly& image(const VarRefA& v);
  /// Image of t_theta(i) with theta built by applying path[0], path[1], ...
  GeoPoly image_along(const std::string& name, std::size_t component, const std::vector<std::size_t>& path);
  GeoPoly rewrite(const DPolyA& g);

 private:
  GeoPoly step(std::size_t component, std::size_t k, const std::vector<GeoPoly>& prev_images) const;

  const Extension& ext_;
  std::vector<BaseMatrix> scalars_;
  std::map<VarRefA, GeoPoly> memo_;
};

/// Throws NonCommutingDerivations when more than one derivation is declared
/// and they fail to commute on A or on the basis of B.
std::vector<GeoPoly> to_geometric_form(const DescendedSystem& sys, const Extension& e);
std::vector<GeoPoly> to_geometric_form(const DescendedSystem& sys, const Extension& e,
                                       std::vector<BaseMatrix> scalars);

/// Identity matrices: the correction coefficient lambda_i(b_j) in place of
/// lambda_i(delta_k b_j). Only used as a negative control.
std::vector<BaseMatrix> printed_form_scalars(const Extension& e);

struct ProlongationCheck {
  bool ok = true;
  std::size_t component = 0;  // first failing component, 1-based
  std::string detail;
};

/// unit_expand(d_k f)_i == d^W(g_i) + sum_j correction[i][j] g_j where g = unit_expand(f).
ProlongationCheck check_prolongation_identity(const DPolyB& f, const Extension& e, std::size_t k);
ProlongationCheck check_prolongation_identity(const DPolyB& f, const Extension& e, std::size_t k,
                                              const DescentDerivation& d, const BaseMatrix& correction);

/// [d_k1^W, d_k2^W](sample) == sum_k a^k d_k^W(sample). structure == nullptr
/// means a = 0. Throws BracketNotInFamily if [d_k1, d_k2] on A or B is not
/// sum_k a^k d_k, or if any a^k != 0 (derivative indices commute, so only
/// commuting families are representable).
bool check_bracket(const Extension& e, std::size_t k1, std::size_t k2, const DPolyA& sample,
                   const std::vector<BaseElem>* structure = nullptr);

/// (a1 d_k1 + a2 d_k2)^W(sample) == a1 d_k1^W(sample) + a2 d_k2^W(sample).
bool check_linearity(const Extension& e, const BaseElem& a1, const BaseElem& a2, std::size_t k1, std::size_t k2,
                     const DPolyA& sample);

/// F: t_theta(i) -> u_i t_theta.
APoly counit_poly(const DPolyA& g, const Extension& e);

/// W(f0) for a morphism given on generators.
class MorphismDescent {
 public:
  explicit MorphismDescent(std::map<VarRefA, DPolyA> images) : images_(std::move(images)) {}
  const std::map<VarRefA, DPolyA>& images() const { return images_; }
  /// Throws UnassignedVariable for variables outside the computed range.
  DPolyA apply(const DPolyA& g) const;

 private:
  std::map<VarRefA, DPolyA> images_;
};

/// t_theta(i) -> unit_expand(d^theta image(t))_i for all source names and
/// |theta| <= max_order. Throws UnassignedVariable if a source name lacks an image.
MorphismDescent descend_morphism(const std::map<std::string, DPolyB>& images, const Extension& e,
                                 const std::vector<std::string>& source_vars, std::uint32_t max_order);

}  // namespace weildesc
