#pragma once

// Generic sparse commutative polynomials over an ordered variable type.
// Coefficients must provide +, -, unary -, is_zero() and scaled(Rational).

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weildesc/exact_arith.hpp"

namespace weildesc {

template <class Var>
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t e = 1) {
    if (e > 0) factors_.emplace_back(std::move(v), e);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// This monomial with the exponent of factor idx lowered by one.
  Monomial lowered(std::size_t idx) const {
    Monomial r = *this;
    if (--r.factors_[idx].second == 0) r.factors_.erase(r.factors_.begin() + static_cast<long>(idx));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  /// Graded lexicographic order; larger variables are more significant.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto i = a.factors_.rbegin(), j = b.factors_.rbegin();
    for (; i != a.factors_.rend() && j != b.factors_.rend(); ++i, ++j) {
      if (i->first < j->first) return true;
      if (j->first < i->first) return false;
      if (i->second != j->second) return i->second < j->second;
    }
    return i == a.factors_.rend() && j != b.factors_.rend();
  }

 private:
  std::vector<Factor> factors_;  // ascending by variable, exponents > 0
};

template <class Var, class Coeff>
class SparsePoly {
 public:
  using Mono = Monomial<Var>;
  using TermMap = std::map<Mono, Coeff>;

  SparsePoly() = default;

  static SparsePoly term(Mono m, const Coeff& c) {
    SparsePoly p;
    p.add_term(std::move(m), c);
    return p;
  }
  static SparsePoly constant(const Coeff& c) { return term(Mono(), c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  /// Coefficient of the constant monomial; nullptr when absent.
  const Coeff* constant_term() const {
    auto it = terms_.find(Mono());
    return it == terms_.end() ? nullptr : &it->second;
  }
  const Coeff* coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  void add_term(Mono m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly scaled(const Rational& q) const {
    SparsePoly r;
    if (q == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.scaled(q));
    return r;
  }

  template <class F>
  SparsePoly map_coefficients(F&& f) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Variables occurring with positive exponent, ascending.
  std::vector<Var> variables() const {
    std::vector<Var> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

 private:
  TermMap terms_;
};

/// Product using an explicit coefficient multiplication.
template <class Var, class Coeff, class CoeffMul>
SparsePoly<Var, Coeff> multiply(const SparsePoly<Var, Coeff>& a, const SparsePoly<Var, Coeff>& b,
                                CoeffMul&& mul) {
  SparsePoly<Var, Coeff> r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, mul(ca, cb));
  return r;
}

template <class Var, class Coeff>
  requires requires(const Coeff& c) { { c * c } -> std::convertible_to<Coeff>; }
SparsePoly<Var, Coeff> operator*(const SparsePoly<Var, Coeff>& a, const SparsePoly<Var, Coeff>& b) {
  return multiply(a, b, [](const Coeff& x, const Coeff& y) { return x * y; });
}

template <class Var, class Coeff>
  requires requires(const Coeff& c) { { c * c } -> std::convertible_to<Coeff>; }
SparsePoly<Var, Coeff> scale(const SparsePoly<Var, Coeff>& p, const Coeff& a) {
  return p.map_coefficients([&](const Coeff& c) { return a * c; });
}

/// Leibniz extension of a derivation: coefficients go through coeff_derive,
/// each variable v through var_derive(v) (a polynomial), and products are
/// formed with mul.
template <class Var, class Coeff, class CoeffDerive, class VarDerive, class Mul>
SparsePoly<Var, Coeff> leibniz_derive(const SparsePoly<Var, Coeff>& f, CoeffDerive&& coeff_derive,
                                      VarDerive&& var_derive, Mul&& mul) {
  using Poly = SparsePoly<Var, Coeff>;
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    r.add_term(m, coeff_derive(c));
    const auto& fs = m.factors();
    for (std::size_t idx = 0; idx < fs.size(); ++idx) {
      const Poly dv = var_derive(fs[idx].first);
      if (dv.is_zero()) continue;
      const Poly rest = Poly::term(m.lowered(idx), c.scaled(Rational(static_cast<long>(fs[idx].second))));
      r += mul(rest, dv);
    }
  }
  return r;
}

/// Ring-homomorphic image of f: coefficient c goes to coeff_image(c), variable
/// v to var_image(v); Target needs +=, and mul(Target, Target).
template <class Target, class Var, class Coeff, class CoeffImage, class VarImage, class Mul>
Target substitute(const SparsePoly<Var, Coeff>& f, Target zero, CoeffImage&& coeff_image,
                  VarImage&& var_image, Mul&& mul) {
  Target r = zero;
  for (const auto& [m, c] : f.terms()) {
    Target t = coeff_image(c);
    for (const auto& [v, e] : m.factors()) {
      const Target img = var_image(v);
      for (std::uint32_t k = 0; k < e; ++k) t = mul(t, img);
    }
    r += t;
  }
  return r;
}

/// Renders terms in descending monomial order, factors ascending.
template <class Var, class Coeff, class VarRender, class TermAppend>
std::string render_poly(const SparsePoly<Var, Coeff>& p, VarRender&& render_var, TermAppend&& append) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono;
    for (const auto& [v, e] : it->first.factors()) {
      if (!mono.empty()) mono += "*";
      mono += render_var(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    append(out, it->second, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace weildesc
