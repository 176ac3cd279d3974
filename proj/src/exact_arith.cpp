#include "weildesc/exact_arith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "weildesc/error.hpp"

namespace weildesc {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::uint32_t at(const Exponents& e, std::size_t j) { return j < e.size() ? e[j] : 0; }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(a, i) + at(b, i);
  return r;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > at(b, i)) return false;
  return true;
}

Exponents sub_exponents(const Exponents& b, const Exponents& a) {
  Exponents r(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - at(a, i);
  trim(r);
  return r;
}

std::size_t main_variable(const BasePoly& a, const BasePoly& b) {
  std::size_t span = std::max(a.variable_span(), b.variable_span());
  for (std::size_t j = span; j-- > 0;)
    if (a.degree_in(j) > 0 || b.degree_in(j) > 0) return j;
  return span;
}

BasePoly content_in(const BasePoly& p, std::size_t j) {
  BasePoly g;
  for (std::uint32_t d = 0, n = p.degree_in(j); d <= n; ++d) {
    BasePoly c = p.coefficient_in(j, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// lc(b)^k * a mod b, viewing both as univariate in t_j.
BasePoly pseudo_remainder(BasePoly a, const BasePoly& b, std::size_t j) {
  const std::uint32_t db = b.degree_in(j);
  const BasePoly lcb = b.coefficient_in(j, db);
  while (!a.is_zero()) {
    const std::uint32_t da = a.degree_in(j);
    if (da < db) break;
    BasePoly lca = a.coefficient_in(j, da);
    a = lcb * a - (lca * b).shifted(j, da - db);
  }
  return a;
}

BasePoly primitive_in(const BasePoly& p, std::size_t j) {
  BasePoly c = content_in(p, j);
  BasePoly q = c.is_constant() ? p : divide_exact(p, c);
  return integer_content(q).primitive;
}

}  // namespace

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = at(a, i), y = at(b, i);
    if (x != y) return x < y;
  }
  return false;
}

// ---------------------------------------------------------------- BasePoly

BasePoly::BasePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

BasePoly BasePoly::variable(std::size_t j) {
  Exponents e(j + 1, 0);
  e[j] = 1;
  return monomial(std::move(e), Rational(1));
}

BasePoly BasePoly::monomial(Exponents e, const Rational& c) {
  BasePoly p;
  trim(e);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool BasePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational BasePoly::constant_value() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& BasePoly::leading_exponents() const { return terms_.rbegin()->first; }
const Rational& BasePoly::leading_coefficient() const { return terms_.rbegin()->second; }

std::size_t BasePoly::variable_span() const {
  std::size_t s = 0;
  for (const auto& [e, c] : terms_) s = std::max(s, e.size());
  return s;
}

std::uint32_t BasePoly::degree_in(std::size_t j) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, at(e, j));
  return d;
}

BasePoly BasePoly::coefficient_in(std::size_t j, std::uint32_t d) const {
  BasePoly r;
  for (const auto& [e, c] : terms_) {
    if (at(e, j) != d) continue;
    Exponents f = e;
    if (j < f.size()) f[j] = 0;
    trim(f);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

BasePoly BasePoly::partial(std::size_t j) const {
  BasePoly r;
  for (const auto& [e, c] : terms_) {
    const auto k = at(e, j);
    if (k == 0) continue;
    Exponents f = e;
    f[j] -= 1;
    trim(f);
    r.add_term(f, c * k);
  }
  return r;
}

void BasePoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BasePoly BasePoly::operator-() const {
  BasePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BasePoly& BasePoly::operator+=(const BasePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BasePoly& BasePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, x] : terms_) x *= c;
  }
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

BasePoly BasePoly::pow(unsigned n) const {
  BasePoly r(Rational(1)), base = *this;
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return r;
}

BasePoly BasePoly::shifted(std::size_t j, std::uint32_t d) const {
  if (d == 0) return *this;
  BasePoly r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    if (f.size() <= j) f.resize(j + 1, 0);
    f[j] += d;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::optional<BasePoly> try_divide(const BasePoly& a, const BasePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  BasePoly q, r = a;
  const auto& lb = b.leading_exponents();
  const auto& cb = b.leading_coefficient();
  const auto db = total_degree(lb);
  while (!r.is_zero()) {
    const auto& lr = r.leading_exponents();
    if (total_degree(lr) < db || !divides(lb, lr)) return std::nullopt;
    BasePoly t = BasePoly::monomial(sub_exponents(lr, lb), r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

BasePoly divide_exact(const BasePoly& a, const BasePoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorKind::InvalidInput, "inexact polynomial division");
  return std::move(*q);
}

ContentSplit integer_content(const BasePoly& p) {
  if (p.is_zero()) return {Rational(0), BasePoly()};
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.leading_coefficient() < 0) content = -content;
  return {content, p * Rational(1 / content)};
}

namespace {

BasePoly gcd_prs(const BasePoly& a, const BasePoly& b) {
  if (a.is_zero()) return integer_content(b).primitive;
  if (b.is_zero()) return integer_content(a).primitive;
  if (a.is_constant() || b.is_constant()) return BasePoly(Rational(1));

  const std::size_t j = main_variable(a, b);
  if (a.degree_in(j) == 0) return gcd(a, content_in(b, j));
  if (b.degree_in(j) == 0) return gcd(content_in(a, j), b);

  const BasePoly ca = content_in(a, j), cb = content_in(b, j);
  BasePoly pa = integer_content(ca.is_constant() ? a : divide_exact(a, ca)).primitive;
  BasePoly pb = integer_content(cb.is_constant() ? b : divide_exact(b, cb)).primitive;
  const BasePoly c = gcd(ca, cb);
  if (pa.degree_in(j) < pb.degree_in(j)) std::swap(pa, pb);

  // Primitive PRS.
  for (;;) {
    BasePoly r = pseudo_remainder(pa, pb, j);
    if (r.is_zero()) break;
    if (r.degree_in(j) == 0) {
      pb = BasePoly(Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, j);
  }
  return integer_content(c * pb).primitive;
}

// Heuristic gcd of integer polynomials (Char, Geddes and Gonnet): evaluate the
// main variable at a large integer, recurse, and rebuild the candidate from its
// balanced base-xi digits. A candidate is accepted only after trial division.

Integer integer_part(const BasePoly& p) {
  // Nonnegative integer content of an integer polynomial.
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

Integer max_norm(const BasePoly& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

BasePoly eval_at(const BasePoly& p, std::size_t j, const Integer& x) {
  std::vector<Integer> powers{Integer(1)};
  BasePoly r;
  for (const auto& [e, c] : p.terms()) {
    const auto d = at(e, j);
    while (powers.size() <= d) powers.push_back(powers.back() * x);
    Exponents f = e;
    if (j < f.size()) f[j] = 0;
    r += BasePoly::monomial(std::move(f), c * Rational(powers[d]));
  }
  return r;
}

Integer balanced_mod(const Integer& c, const Integer& x) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (2 * r > x) r -= x;
  return r;
}

BasePoly interpolate(BasePoly h, std::size_t j, const Integer& x) {
  BasePoly f;
  for (std::uint32_t k = 0; !h.is_zero(); ++k) {
    BasePoly g;
    for (const auto& [e, c] : h.terms()) g += BasePoly::monomial(e, Rational(balanced_mod(c.get_num(), x)));
    f += g.shifted(j, k);
    h -= g;
    h *= Rational(1) / Rational(x);
  }
  return f;
}

BasePoly primitive_part(const BasePoly& p) { return integer_content(p).primitive; }

std::optional<BasePoly> heu_gcd(const BasePoly& f0, const BasePoly& g0) {
  if (f0.is_zero()) return g0;
  if (g0.is_zero()) return f0;
  Integer cf = integer_part(f0), cg = integer_part(g0), c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f0.is_constant() || g0.is_constant()) return BasePoly(Rational(c));
  const BasePoly f = f0 * Rational(Rational(1) / Rational(cf)), g = g0 * Rational(Rational(1) / Rational(cg));

  const std::size_t j = main_variable(f, g);
  const Integer fn = max_norm(f), gn = max_norm(g);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  Integer x = std::max(Integer(std::min(bound, Integer(99 * sqrt(bound)))),
                       Integer(2 * std::min(Integer(fn / abs(f.leading_coefficient().get_num())),
                                            Integer(gn / abs(g.leading_coefficient().get_num()))) + 2));
  for (int attempt = 0; attempt < 6; ++attempt) {
    const BasePoly ff = eval_at(f, j, x), gg = eval_at(g, j, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heu_gcd(ff, gg);
      if (!h) return std::nullopt;
      const BasePoly cand = primitive_part(interpolate(*h, j, x));
      if (!cand.is_zero() && try_divide(f, cand) && try_divide(g, cand)) return cand * Rational(c);
      for (const BasePoly* side : {&ff, &gg}) {
        const BasePoly& whole = side == &ff ? f : g;
        const BasePoly& other = side == &ff ? g : f;
        auto cof = try_divide(*side, *h);
        if (!cof) continue;
        const BasePoly cofactor = interpolate(*cof, j, x);
        if (cofactor.is_zero()) continue;
        auto q = try_divide(whole, cofactor);
        if (q && try_divide(other, *q)) return *q * Rational(c);
      }
    }
    Integer r4 = sqrt(sqrt(x));
    x = 73794 * x * r4 / 27011;
  }
  return std::nullopt;
}

}  // namespace

BasePoly gcd(const BasePoly& a, const BasePoly& b) {
  if (a.is_zero()) return integer_content(b).primitive;
  if (b.is_zero()) return integer_content(a).primitive;
  if (a.is_constant() || b.is_constant()) return BasePoly(Rational(1));
  const BasePoly pa = primitive_part(a), pb = primitive_part(b);
  if (auto h = heu_gcd(pa, pb)) return primitive_part(*h);
  return gcd_prs(pa, pb);
}

std::string render(const BasePoly& p, std::span<const std::string> var_names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (any) mono << "*";
      mono << (j < var_names.size() ? var_names[j] : "t" + std::to_string(j + 1));
      if (e[j] > 1) mono << "^" << e[j];
      any = true;
    }
    if (!any) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono.str();
    } else if (mag.get_den() == 1) {
      out << mag.get_str() << "*" << mono.str();
    } else {
      out << "(" << mag.get_str() << ")*" << mono.str();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- BaseElem

BaseElem::BaseElem(const Rational& q) : num_(q), den_(Rational(1)) { normalize_scale(); }

BaseElem::BaseElem(BasePoly p) : num_(std::move(p)), den_(Rational(1)) { normalize_scale(); }

BaseElem::BaseElem(BasePoly num, BasePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = BasePoly(Rational(1));
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    BasePoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  normalize_scale();
}

void BaseElem::normalize_scale() {
  if (num_.is_zero()) {
    den_ = BasePoly(Rational(1));
    return;
  }
  auto [qd, d] = integer_content(den_);
  auto [qn, n] = integer_content(num_);
  Rational q = qn / qd;
  num_ = n * Rational(q.get_num());
  den_ = d * Rational(q.get_den());
}

bool BaseElem::is_one() const {
  return num_.is_constant() && den_.is_constant() && num_.constant_value() == 1 &&
         den_.constant_value() == 1;
}

bool BaseElem::is_negative() const { return !num_.is_zero() && num_.leading_coefficient() < 0; }

BaseElem BaseElem::operator-() const { return BaseElem(-num_, den_, Canonical{}); }

BaseElem operator+(const BaseElem& a, const BaseElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return BaseElem(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) {
    BaseElem r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, BaseElem::Canonical{});
    r.normalize_scale();
    return r;
  }
  // With g = gcd(a.den, b.den), only factors of g can cancel.
  const BasePoly g = gcd(a.den_, b.den_);
  const BasePoly ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
  BasePoly num = a.num_ * bd + b.num_ * ad;
  BasePoly den = a.den_ * bd;
  if (!g.is_constant() && !num.is_zero()) {
    const BasePoly h = gcd(num, g);
    if (!h.is_constant()) {
      num = divide_exact(num, h);
      den = divide_exact(den, h);
    }
  }
  BaseElem r(std::move(num), std::move(den), BaseElem::Canonical{});
  r.normalize_scale();
  return r;
}

BaseElem operator-(const BaseElem& a, const BaseElem& b) { return a + (-b); }

BaseElem operator*(const BaseElem& a, const BaseElem& b) {
  if (a.is_zero() || b.is_zero()) return BaseElem();
  // Cross-cancel; the operands are already reduced.
  BasePoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  BasePoly an = g1.is_constant() ? a.num_ : divide_exact(a.num_, g1);
  BasePoly bd = g1.is_constant() ? b.den_ : divide_exact(b.den_, g1);
  BasePoly bn = g2.is_constant() ? b.num_ : divide_exact(b.num_, g2);
  BasePoly ad = g2.is_constant() ? a.den_ : divide_exact(a.den_, g2);
  BaseElem r(an * bn, ad * bd, BaseElem::Canonical{});
  r.normalize_scale();
  return r;
}

BaseElem operator/(const BaseElem& a, const BaseElem& b) { return a * b.inverse(); }

BaseElem BaseElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  BaseElem r(den_, num_, Canonical{});
  r.normalize_scale();
  return r;
}

BaseElem BaseElem::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  BaseElem r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Canonical{});
  r.normalize_scale();
  return r;
}

BaseElem BaseElem::scaled(const Rational& q) const {
  if (q == 0 || is_zero()) return BaseElem();
  BaseElem r(num_ * q, den_, Canonical{});
  r.normalize_scale();
  return r;
}

BaseElem base_arith(const BaseElem& a, const BaseElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

namespace {

bool single_factor(const BasePoly& p) {
  if (p.num_terms() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (e.empty()) return c >= 0 && c.get_den() == 1;
  std::size_t vars = 0;
  for (auto x : e) vars += x > 0 ? 1 : 0;
  return c == 1 && vars == 1;
}

}  // namespace

bool is_atomic(const BaseElem& a) { return a.den().is_constant() && a.den().constant_value() == 1 && single_factor(a.num()); }

std::string render(const BaseElem& a, std::span<const std::string> var_names) {
  std::string n = render(a.num(), var_names);
  if (a.den().is_constant() && a.den().constant_value() == 1) return n;
  if (a.num().num_terms() > 1) n = "(" + n + ")";
  std::string d = render(a.den(), var_names);
  if (!single_factor(a.den())) d = "(" + d + ")";
  return n + "/" + d;
}

void append_term(std::string& out, const BaseElem& c, const std::string& mono,
                 std::span<const std::string> var_names) {
  if (c.is_zero()) return;
  const bool first = out.empty();
  const bool negative = c.is_negative();
  const BaseElem mag = negative ? -c : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  std::string body = render(mag, var_names);
  if (mono.empty()) {
    const bool is_sum = mag.den().is_constant() && mag.den().constant_value() == 1 && mag.num().num_terms() > 1;
    if (is_sum && (!first || negative)) body = "(" + body + ")";
    out += body;
  } else if (mag.is_one()) {
    out += mono;
  } else if (is_atomic(mag)) {
    out += body + "*" + mono;
  } else {
    out += "(" + body + ")*" + mono;
  }
}

// ---------------------------------------------------------------- BaseField

BaseField::BaseField(std::vector<std::string> var_names, std::vector<BaseDerivation> derivations)
    : var_names_(std::move(var_names)), derivations_(std::move(derivations)) {
  for (std::size_t i = 0; i < var_names_.size(); ++i)
    for (std::size_t j = i + 1; j < var_names_.size(); ++j)
      if (var_names_[i] == var_names_[j])
        throw Error(ErrorKind::InvalidInput, "duplicate base variable '" + var_names_[i] + "'");
  for (std::size_t i = 0; i < derivations_.size(); ++i) {
    for (std::size_t j = i + 1; j < derivations_.size(); ++j)
      if (derivations_[i].name == derivations_[j].name)
        throw Error(ErrorKind::InvalidInput, "duplicate derivation '" + derivations_[i].name + "'");
    if (derivations_[i].images.size() != var_names_.size())
      throw Error(ErrorKind::InvalidInput,
                  "derivation '" + derivations_[i].name + "' must give one image per variable");
    for (const auto& img : derivations_[i].images)
      if (img.num().variable_span() > var_names_.size() || img.den().variable_span() > var_names_.size())
        throw Error(ErrorKind::InvalidInput, "derivation image uses an undeclared variable");
  }
}

const std::string& BaseField::derivation_name(std::size_t k) const {
  if (k >= derivations_.size())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return derivations_[k].name;
}

std::size_t BaseField::derivation_index(const std::string& name) const {
  for (std::size_t k = 0; k < derivations_.size(); ++k)
    if (derivations_[k].name == name) return k;
  throw Error(ErrorKind::UnknownDerivation, "'" + name + "'");
}

std::size_t BaseField::var_index(const std::string& name) const {
  for (std::size_t j = 0; j < var_names_.size(); ++j)
    if (var_names_[j] == name) return j;
  throw Error(ErrorKind::IndexOutOfRange, "no base variable '" + name + "'");
}

BaseElem BaseField::derive_with_images(const BaseElem& a, std::span<const BaseElem> images) const {
  if (a.is_constant()) return BaseElem();
  auto derive_poly = [&](const BasePoly& p) {
    BaseElem r;
    for (std::size_t j = 0, n = std::min(p.variable_span(), images.size()); j < n; ++j) {
      if (images[j].is_zero()) continue;
      BasePoly dp = p.partial(j);
      if (!dp.is_zero()) r += BaseElem(std::move(dp)) * images[j];
    }
    return r;
  };
  const BaseElem dn = derive_poly(a.num());
  if (a.den().is_constant()) return dn * BaseElem(a.den()).inverse();
  const BaseElem den(a.den());
  const BaseElem num(a.num());
  return (dn * den - num * derive_poly(a.den())) / (den * den);
}

BaseElem BaseField::derive(const BaseElem& a, std::size_t k) const {
  if (k >= derivations_.size())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return derive_with_images(a, derivations_[k].images);
}

std::vector<BaseElem> BaseField::bracket_images(std::size_t k, std::size_t l) const {
  std::vector<BaseElem> r;
  r.reserve(var_names_.size());
  for (std::size_t j = 0; j < var_names_.size(); ++j)
    r.push_back(derive(derivations_[l].images[j], k) - derive(derivations_[k].images[j], l));
  return r;
}

BaseElem base_derive(const BaseField& field, const BaseElem& a, const std::string& k) {
  return field.derive(a, k);
}

}  // namespace weildesc
