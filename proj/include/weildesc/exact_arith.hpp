#pragma once

// Exact arithmetic in the base differential field A = Q(t_1, ..., t_m).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weildesc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial in t_1..t_m. Trailing zeros are never stored,
/// so the empty vector is the monomial 1 and polynomials do not need to know m.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order with t_1 > t_2 > ... > t_m.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q. Terms are kept in ascending grlex
/// order, so the leading term is the last entry.
class BasePoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  BasePoly() = default;
  explicit BasePoly(const Rational& c);
  static BasePoly variable(std::size_t j);
  static BasePoly monomial(Exponents e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; zero for the zero polynomial. Only meaningful if is_constant().
  Rational constant_value() const;
  std::size_t num_terms() const { return terms_.size(); }

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  /// Largest variable index + 1 over all terms.
  std::size_t variable_span() const;
  std::uint32_t degree_in(std::size_t j) const;
  /// Coefficient of t_j^d, as a polynomial free of t_j.
  BasePoly coefficient_in(std::size_t j, std::uint32_t d) const;
  BasePoly partial(std::size_t j) const;

  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& other);
  BasePoly& operator-=(const BasePoly& other);
  BasePoly& operator*=(const Rational& c);

  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator*(BasePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const BasePoly& a, const BasePoly& b) { return a.terms_ == b.terms_; }

  BasePoly pow(unsigned n) const;
  BasePoly shifted(std::size_t j, std::uint32_t d) const;  // multiply by t_j^d

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// Exact quotient a / b. Throws InvalidInput if b does not divide a.
BasePoly divide_exact(const BasePoly& a, const BasePoly& b);
/// a / b if b divides a, else nullopt. Throws DivisionByZero.
std::optional<BasePoly> try_divide(const BasePoly& a, const BasePoly& b);

/// Greatest common divisor, normalized to integer coefficients with content 1
/// and positive leading coefficient. gcd(0, 0) = 0.
BasePoly gcd(const BasePoly& a, const BasePoly& b);

/// Splits p = content * primitive where primitive has coprime integer
/// coefficients and positive leading coefficient.
struct ContentSplit {
  Rational content;
  BasePoly primitive;
};
ContentSplit integer_content(const BasePoly& p);

std::string render(const BasePoly& p, std::span<const std::string> var_names);

/// Element of the fraction field, kept in canonical form:
/// gcd(num, den) = 1, both with integer coefficients, the integer contents of
/// num and den coprime, and den's grlex-leading coefficient positive.
/// Canonical form makes structural equality coincide with field equality.
class BaseElem {
 public:
  BaseElem() : num_(), den_(Rational(1)) {}
  BaseElem(long n) : BaseElem(Rational(n)) {}  // NOLINT: implicit from integer literals
  BaseElem(const Rational& q);                  // NOLINT
  BaseElem(BasePoly p);                         // NOLINT
  BaseElem(BasePoly num, BasePoly den);

  static BaseElem variable(std::size_t j) { return BaseElem(BasePoly::variable(j)); }

  const BasePoly& num() const { return num_; }
  const BasePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Sign of the grlex-leading coefficient of num.
  bool is_negative() const;

  BaseElem operator-() const;
  BaseElem& operator+=(const BaseElem& b) { return *this = *this + b; }
  BaseElem& operator-=(const BaseElem& b) { return *this = *this - b; }
  BaseElem& operator*=(const BaseElem& b) { return *this = *this * b; }

  friend BaseElem operator+(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator-(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator*(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator/(const BaseElem& a, const BaseElem& b);
  friend bool operator==(const BaseElem& a, const BaseElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  BaseElem inverse() const;
  BaseElem pow(int n) const;
  BaseElem scaled(const Rational& q) const;

 private:
  struct Canonical {};
  BaseElem(BasePoly num, BasePoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_scale();

  BasePoly num_;
  BasePoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
BaseElem base_arith(const BaseElem& a, const BaseElem& b, ArithOp op);

/// Is the rendered form a single atom (number or bare power of a variable)?
bool is_atomic(const BaseElem& a);
std::string render(const BaseElem& a, std::span<const std::string> var_names);

/// Appends the term c*mono to a sum being rendered into out (empty out means
/// first term). Signs are pulled out front; an empty mono renders c alone.
void append_term(std::string& out, const BaseElem& c, const std::string& mono,
                 std::span<const std::string> var_names);

struct BaseDerivation {
  std::string name;
  std::vector<BaseElem> images;  // images[j] = d(t_j)
};

/// The differential field (A, d) with d = (d_1, ..., d_n).
class BaseField {
 public:
  BaseField() = default;
  BaseField(std::vector<std::string> var_names, std::vector<BaseDerivation> derivations);

  const std::vector<std::string>& var_names() const { return var_names_; }
  std::size_t num_vars() const { return var_names_.size(); }
  const std::vector<BaseDerivation>& derivations() const { return derivations_; }
  std::size_t num_derivations() const { return derivations_.size(); }
  const std::string& derivation_name(std::size_t k) const;

  /// Throws UnknownDerivation.
  std::size_t derivation_index(const std::string& name) const;
  std::size_t var_index(const std::string& name) const;  // IndexOutOfRange if absent

  BaseElem derive(const BaseElem& a, std::size_t k) const;
  BaseElem derive(const BaseElem& a, const std::string& name) const {
    return derive(a, derivation_index(name));
  }
  /// Applies the derivation of A determined by its values on t_1..t_m.
  BaseElem derive_with_images(const BaseElem& a, std::span<const BaseElem> images) const;

  /// [d_k, d_l](t_j) for all j; all zero iff the two derivations commute.
  std::vector<BaseElem> bracket_images(std::size_t k, std::size_t l) const;

  std::string render(const BaseElem& a) const { return weildesc::render(a, var_names_); }

 private:
  std::vector<std::string> var_names_;
  std::vector<BaseDerivation> derivations_;
};

BaseElem base_derive(const BaseField& field, const BaseElem& a, const std::string& k);

}  // namespace weildesc
