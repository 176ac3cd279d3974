#pragma once

// The finite free differential extension (B, delta) over (A, d), encoded
// entirely by its multiplication table in a fixed A-basis b_1..b_l.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weildesc/exact_arith.hpp"

namespace weildesc {

using BaseMatrix = std::vector<std::vector<BaseElem>>;
/// c[i][j][k] with b_i * b_j = sum_k c[i][j][k] b_k.
using StructureConstants = std::vector<std::vector<std::vector<BaseElem>>>;

/// An element of B by its coordinates in the basis; coords[i] = lambda_i(u).
struct ExtElem {
  std::vector<BaseElem> coords;

  ExtElem() = default;
  explicit ExtElem(std::vector<BaseElem> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;

  ExtElem operator-() const;
  ExtElem& operator+=(const ExtElem& v);
  ExtElem& operator-=(const ExtElem& v);
  friend ExtElem operator+(ExtElem u, const ExtElem& v) { return u += v; }
  friend ExtElem operator-(ExtElem u, const ExtElem& v) { return u -= v; }
  friend bool operator==(const ExtElem&, const ExtElem&) = default;

  ExtElem scaled(const Rational& q) const;
};

/// ext_scalar: a * u for a in A.
ExtElem operator*(const BaseElem& a, const ExtElem& u);

/// Univariate polynomial over A, coefficients in ascending degree.
using BaseUPoly = std::vector<BaseElem>;

struct InvariantResult {
  explicit InvariantResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // 1-based indices
  std::string detail;
};

struct ValidationReport {
  std::vector<InvariantResult> invariants;
  bool ok() const;
  const InvariantResult* first_failure() const;
};

class Extension {
 public:
  /// Builds from raw data without validation; see validate_extension.
  Extension(BaseField base, std::vector<std::string> basis_names, StructureConstants c,
            std::vector<BaseElem> unit, std::vector<BaseMatrix> delta);

  const BaseField& base() const { return base_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const StructureConstants& structure_constants() const { return c_; }
  const BaseElem& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }
  const std::vector<BaseElem>& unit_coords() const { return unit_; }
  /// delta_k(b_j) = sum_i matrix[i][j] b_i, i.e. matrix[i][j] = lambda_i(delta_k b_j).
  const BaseMatrix& derivation_matrix(std::size_t k) const;
  const std::vector<BaseMatrix>& derivation_matrices() const { return delta_; }

  /// Name of the adjoined generator for monogenic presentations.
  const std::optional<std::string>& generator() const { return generator_; }
  /// Coordinates of the generator x (b_2 when l > 1).
  const std::optional<ExtElem>& generator_element() const { return generator_element_; }

  ExtElem zero() const;
  ExtElem one() const { return ExtElem(unit_); }
  ExtElem basis(std::size_t i) const;
  ExtElem from_base(const BaseElem& a) const { return a * one(); }

  ExtElem add(const ExtElem& u, const ExtElem& v) const { return u + v; }
  ExtElem mul(const ExtElem& u, const ExtElem& v) const;
  ExtElem pow(const ExtElem& u, unsigned n) const;
  /// Throws NotInvertible when u is zero or a zero divisor.
  ExtElem inverse(const ExtElem& u) const;
  ExtElem delta(const ExtElem& u, std::size_t k) const;
  ExtElem delta(const ExtElem& u, const std::string& k) const {
    return delta(u, base_.derivation_index(k));
  }
  /// 1-based coordinate functional; throws IndexOutOfRange.
  const BaseElem& lambda(const ExtElem& u, std::size_t i) const;

  /// Matrix of multiplication by u: column j holds the coordinates of u * b_j.
  BaseMatrix multiplication_matrix(const ExtElem& u) const;

  /// Witness (k, l, j) (0-based) where [delta_k, delta_l](b_j) != 0 or
  /// [d_k, d_l](t_j) != 0; nullopt if all declared derivations commute.
  std::optional<std::vector<std::size_t>> commutation_witness() const;

  std::string render(const ExtElem& u) const;

 private:
  friend Extension ext_from_minpoly(const BaseField&, const std::string&, const BaseUPoly&);

  BaseField base_;
  std::vector<std::string> basis_names_;
  StructureConstants c_;
  std::vector<BaseElem> unit_;
  std::vector<BaseMatrix> delta_;
  std::optional<std::string> generator_;
  std::optional<ExtElem> generator_element_;
};

/// B = A[x]/(p) with basis 1, x, ..., x^{l-1}; delta_k(x) = -p^{d_k}(x) / p'(x) mod p.
/// Throws NotMonic or NotSeparable.
Extension ext_from_minpoly(const BaseField& base, const std::string& gen_name, const BaseUPoly& p);

/// Validated constructor; throws InvalidAlgebra naming the first violated invariant.
Extension ext_from_table(BaseField base, std::vector<std::string> basis_names, StructureConstants c,
                         std::vector<BaseElem> unit, std::vector<BaseMatrix> delta);

/// Checks commutativity, associativity, the unit law, Leibniz compatibility
/// and delta(1) = 0. Never throws on invalid data.
ValidationReport validate_extension(const Extension& e);

BaseElem lambda(const Extension& e, const ExtElem& u, std::size_t i);

/// Solves m * x = rhs over A by Gaussian elimination; nullopt if singular.
std::optional<std::vector<BaseElem>> solve_linear(BaseMatrix m, std::vector<BaseElem> rhs);

}  // namespace weildesc
