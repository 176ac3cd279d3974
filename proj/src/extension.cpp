#include "weildesc/extension.hpp"

#include <sstream>
#include <utility>

#include "weildesc/error.hpp"

namespace weildesc {

// ---------------------------------------------------------------- ExtElem

bool ExtElem::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

ExtElem ExtElem::operator-() const {
  ExtElem r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

ExtElem& ExtElem::operator+=(const ExtElem& v) {
  if (coords.size() < v.coords.size()) coords.resize(v.coords.size());
  for (std::size_t i = 0; i < v.coords.size(); ++i) coords[i] += v.coords[i];
  return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& v) {
  if (coords.size() < v.coords.size()) coords.resize(v.coords.size());
  for (std::size_t i = 0; i < v.coords.size(); ++i) coords[i] -= v.coords[i];
  return *this;
}

ExtElem ExtElem::scaled(const Rational& q) const {
  ExtElem r = *this;
  for (auto& c : r.coords) c = c.scaled(q);
  return r;
}

ExtElem operator*(const BaseElem& a, const ExtElem& u) {
  ExtElem r = u;
  for (auto& c : r.coords) c = a * c;
  return r;
}

// ---------------------------------------------------------------- reports

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const InvariantResult* ValidationReport::first_failure() const {
  for (const auto& r : invariants)
    if (!r.passed) return &r;
  return nullptr;
}

// ---------------------------------------------------------------- Extension

Extension::Extension(BaseField base, std::vector<std::string> basis_names, StructureConstants c,
                     std::vector<BaseElem> unit, std::vector<BaseMatrix> delta)
    : base_(std::move(base)),
      basis_names_(std::move(basis_names)),
      c_(std::move(c)),
      unit_(std::move(unit)),
      delta_(std::move(delta)) {
  const std::size_t l = basis_names_.size();
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidAlgebra, "dimensions: " + what); };
  if (l == 0) bad("empty basis");
  if (c_.size() != l) bad("structure constants");
  for (const auto& ci : c_) {
    if (ci.size() != l) bad("structure constants");
    for (const auto& cij : ci)
      if (cij.size() != l) bad("structure constants");
  }
  if (unit_.size() != l) bad("unit coordinates");
  if (delta_.size() != base_.num_derivations()) bad("one derivation matrix per base derivation");
  for (const auto& m : delta_) {
    if (m.size() != l) bad("derivation matrix");
    for (const auto& row : m)
      if (row.size() != l) bad("derivation matrix");
  }
}

const BaseMatrix& Extension::derivation_matrix(std::size_t k) const {
  if (k >= delta_.size())
    throw Error(ErrorKind::UnknownDerivation, "derivation #" + std::to_string(k + 1));
  return delta_[k];
}


ExtElem Extension::zero() const { return ExtElem(std::vector<BaseElem>(dim())); }

ExtElem Extension::basis(std::size_t i) const {
  if (i >= dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1));
  ExtElem r = zero();
  r.coords[i] = BaseElem(1);
  return r;
}

ExtElem Extension::mul(const ExtElem& u, const ExtElem& v) const {
  ExtElem r = zero();
  const std::size_t l = dim();
  for (std::size_t i = 0; i < l; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (v.coords[j].is_zero()) continue;
      const BaseElem uv = u.coords[i] * v.coords[j];
      for (std::size_t k = 0; k < l; ++k)
        if (!c_[i][j][k].is_zero()) r.coords[k] += uv * c_[i][j][k];
    }
  }
  return r;
}

ExtElem Extension::pow(const ExtElem& u, unsigned n) const {
  ExtElem r = one(), base = u;
  while (n > 0) {
    if (n & 1u) r = mul(r, base);
    n >>= 1u;
    if (n > 0) base = mul(base, base);
  }
  return r;
}

BaseMatrix Extension::multiplication_matrix(const ExtElem& u) const {
  const std::size_t l = dim();
  BaseMatrix m(l, std::vector<BaseElem>(l));
  for (std::size_t j = 0; j < l; ++j) {
    ExtElem col = mul(u, basis(j));
    for (std::size_t k = 0; k < l; ++k) m[k][j] = col.coords[k];
  }
  return m;
}

ExtElem Extension::inverse(const ExtElem& u) const {
  if (u.is_zero()) throw Error(ErrorKind::NotInvertible, "zero element");
  auto x = solve_linear(multiplication_matrix(u), unit_);
  if (!x) throw Error(ErrorKind::NotInvertible, "element " + render(u) + " is a zero divisor");
  return ExtElem(std::move(*x));
}

ExtElem Extension::delta(const ExtElem& u, std::size_t k) const {
  const BaseMatrix& m = derivation_matrix(k);
  const std::size_t l = dim();
  ExtElem r = zero();
  for (std::size_t i = 0; i < l; ++i) {
    BaseElem acc = base_.derive(u.coords[i], k);
    for (std::size_t j = 0; j < l; ++j)
      if (!m[i][j].is_zero() && !u.coords[j].is_zero()) acc += m[i][j] * u.coords[j];
    r.coords[i] = std::move(acc);
  }
  return r;
}

const BaseElem& Extension::lambda(const ExtElem& u, std::size_t i) const {
  if (i < 1 || i > dim() || i > u.coords.size())
    throw Error(ErrorKind::IndexOutOfRange, "lambda index " + std::to_string(i));
  return u.coords[i - 1];
}

BaseElem lambda(const Extension& e, const ExtElem& u, std::size_t i) { return e.lambda(u, i); }

std::optional<std::vector<std::size_t>> Extension::commutation_witness() const {
  const std::size_t n = base_.num_derivations();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      auto images = base_.bracket_images(k, l);
      for (std::size_t j = 0; j < images.size(); ++j)
        if (!images[j].is_zero()) return std::vector<std::size_t>{k, l, j};
      for (std::size_t j = 0; j < dim(); ++j) {
        const ExtElem b = basis(j);
        if (!(delta(delta(b, l), k) - delta(delta(b, k), l)).is_zero())
          return std::vector<std::size_t>{k, l, j};
      }
    }
  }
  return std::nullopt;
}

std::string Extension::render(const ExtElem& u) const {
  std::string out;
  for (std::size_t i = 0; i < u.coords.size() && i < dim(); ++i) {
    const std::string& name = basis_names_[i];
    append_term(out, u.coords[i], name == "1" ? std::string() : name, base_.var_names());
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- linear algebra

std::optional<std::vector<BaseElem>> solve_linear(BaseMatrix m, std::vector<BaseElem> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const BaseElem inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const BaseElem f = m[r][col];
      for (std::size_t j = col; j < n; ++j)
        if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// ---------------------------------------------------------------- univariate helpers

namespace {

void trim(BaseUPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BaseUPoly upoly_sub(BaseUPoly a, const BaseUPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

BaseUPoly upoly_mul(const BaseUPoly& a, const BaseUPoly& b) {
  if (a.empty() || b.empty()) return {};
  BaseUPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<BaseUPoly, BaseUPoly> upoly_divmod(BaseUPoly a, const BaseUPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  BaseUPoly q(a.size() - b.size() + 1);
  const BaseElem lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BaseElem f = a.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

BaseUPoly upoly_mod(const BaseUPoly& a, const BaseUPoly& p) { return upoly_divmod(a, p).second; }

BaseUPoly upoly_derivative(const BaseUPoly& p) {
  BaseUPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i].scaled(Rational(static_cast<long>(i))));
  trim(r);
  return r;
}

// s with s * a == 1 mod p, or nullopt when gcd(a, p) is not a unit.
std::optional<BaseUPoly> upoly_inverse_mod(const BaseUPoly& a, const BaseUPoly& p) {
  BaseUPoly r0 = p, r1 = upoly_mod(a, p);
  BaseUPoly s0, s1{BaseElem(1)};
  while (!r1.empty()) {
    auto [q, r] = upoly_divmod(r0, r1);
    BaseUPoly s = upoly_sub(s0, upoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return std::nullopt;
  const BaseElem inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  return upoly_mod(s0, p);
}

}  // namespace

Extension ext_from_minpoly(const BaseField& base, const std::string& gen_name, const BaseUPoly& poly) {
  BaseUPoly p = poly;
  trim(p);
  if (p.size() < 2) throw Error(ErrorKind::NotMonic, "minimal polynomial must have degree at least 1");
  if (!p.back().is_one()) throw Error(ErrorKind::NotMonic, "leading coefficient is " + base.render(p.back()));
  const std::size_t l = p.size() - 1;

  const BaseUPoly dp = upoly_derivative(p);
  auto dp_inv = upoly_inverse_mod(dp, p);
  if (!dp_inv) throw Error(ErrorKind::NotSeparable, "gcd(p, p') is not 1");

  auto coords = [l](const BaseUPoly& r) {
    std::vector<BaseElem> v(l);
    for (std::size_t i = 0; i < r.size() && i < l; ++i) v[i] = r[i];
    return v;
  };

  // x^n mod p for n < 2l - 1.
  std::vector<BaseUPoly> powers;
  powers.push_back({BaseElem(1)});
  for (std::size_t n = 1; n + 1 < 2 * l; ++n) {
    BaseUPoly next(powers.back().size() + 1);
    for (std::size_t i = 0; i < powers.back().size(); ++i) next[i + 1] = powers.back()[i];
    powers.push_back(upoly_mod(next, p));
  }

  StructureConstants c(l, std::vector<std::vector<BaseElem>>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) c[i][j] = coords(powers[i + j]);

  std::vector<BaseElem> unit(l);
  unit[0] = BaseElem(1);

  std::vector<BaseMatrix> delta;
  for (std::size_t k = 0; k < base.num_derivations(); ++k) {
    BaseUPoly pd;
    for (const auto& a : p) pd.push_back(base.derive(a, k));
    trim(pd);
    // delta(x) = -p^{d}(x) / p'(x)
    BaseUPoly dx = upoly_mod(upoly_mul(pd, *dp_inv), p);
    for (auto& a : dx) a = -a;

    BaseMatrix m(l, std::vector<BaseElem>(l));
    for (std::size_t j = 1; j < l; ++j) {
      // delta(x^j) = j x^{j-1} delta(x)
      BaseUPoly dj = upoly_mod(upoly_mul(powers[j - 1], dx), p);
      for (auto& a : dj) a = a.scaled(Rational(static_cast<long>(j)));
      auto col = coords(dj);
      for (std::size_t i = 0; i < l; ++i) m[i][j] = col[i];
    }
    delta.push_back(std::move(m));
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < l; ++i)
    names.push_back(i == 0 ? "1" : i == 1 ? gen_name : gen_name + "^" + std::to_string(i));

  Extension e(base, std::move(names), std::move(c), std::move(unit), std::move(delta));
  e.generator_ = gen_name;
  // For l = 1 the generator is the root -p_0 of x + p_0.
  e.generator_element_ = l > 1 ? e.basis(1) : ExtElem(std::vector<BaseElem>{-p[0]});
  return e;
}

Extension ext_from_table(BaseField base, std::vector<std::string> basis_names, StructureConstants c,
                         std::vector<BaseElem> unit, std::vector<BaseMatrix> delta) {
  Extension e(std::move(base), std::move(basis_names), std::move(c), std::move(unit), std::move(delta));
  ValidationReport report = validate_extension(e);
  if (const auto* f = report.first_failure()) {
    std::ostringstream msg;
    msg << f->name;
    if (!f->witness.empty()) {
      msg << " at (";
      for (std::size_t i = 0; i < f->witness.size(); ++i) msg << (i ? "," : "") << f->witness[i];
      msg << ")";
    }
    if (!f->detail.empty()) msg << ": " << f->detail;
    throw Error(ErrorKind::InvalidAlgebra, msg.str());
  }
  return e;
}

ValidationReport validate_extension(const Extension& e) {
  const std::size_t l = e.dim();
  const auto& c = e.structure_constants();
  ValidationReport report;

  InvariantResult comm{"commutativity"};
  for (std::size_t i = 0; i < l && comm.passed; ++i)
    for (std::size_t j = i + 1; j < l && comm.passed; ++j)
      for (std::size_t k = 0; k < l && comm.passed; ++k)
        if (!(c[i][j][k] == c[j][i][k])) {
          comm.passed = false;
          comm.witness = {i + 1, j + 1, k + 1};
        }
  report.invariants.push_back(comm);

  InvariantResult assoc{"associativity"};
  for (std::size_t i = 0; i < l && assoc.passed; ++i)
    for (std::size_t j = 0; j < l && assoc.passed; ++j)
      for (std::size_t k = 0; k < l && assoc.passed; ++k)
        for (std::size_t m = 0; m < l && assoc.passed; ++m) {
          BaseElem lhs, rhs;
          for (std::size_t r = 0; r < l; ++r) {
            lhs += c[i][j][r] * c[r][k][m];
            rhs += c[j][k][r] * c[i][r][m];
          }
          if (!(lhs == rhs)) {
            assoc.passed = false;
            assoc.witness = {i + 1, j + 1, k + 1, m + 1};
          }
        }
  report.invariants.push_back(assoc);

  InvariantResult unit{"unit"};
  for (std::size_t j = 0; j < l && unit.passed; ++j)
    for (std::size_t k = 0; k < l && unit.passed; ++k) {
      BaseElem s;
      for (std::size_t i = 0; i < l; ++i) s += e.unit_coords()[i] * c[i][j][k];
      if (!(s == BaseElem(j == k ? 1 : 0))) {
        unit.passed = false;
        unit.witness = {j + 1, k + 1};
      }
    }
  report.invariants.push_back(unit);

  InvariantResult leibniz{"leibniz"};
  for (std::size_t k = 0; k < e.base().num_derivations() && leibniz.passed; ++k) {
    for (std::size_t i = 0; i < l && leibniz.passed; ++i)
      for (std::size_t j = 0; j < l && leibniz.passed; ++j) {
        const ExtElem bi = e.basis(i), bj = e.basis(j);
        const ExtElem lhs = e.delta(ExtElem(c[i][j]), k);
        const ExtElem rhs = e.mul(e.delta(bi, k), bj) + e.mul(bi, e.delta(bj, k));
        if (!(lhs == rhs)) {
          leibniz.passed = false;
          leibniz.witness = {i + 1, j + 1};
          leibniz.detail = "derivation " + e.base().derivation_name(k);
        }
      }
  }
  report.invariants.push_back(leibniz);

  InvariantResult delta_unit{"delta_unit"};
  for (std::size_t k = 0; k < e.base().num_derivations() && delta_unit.passed; ++k)
    if (!e.delta(e.one(), k).is_zero()) {
      delta_unit.passed = false;
      delta_unit.witness = {k + 1};
      delta_unit.detail = "derivation " + e.base().derivation_name(k);
    }
  report.invariants.push_back(delta_unit);

  return report;
}

}  // namespace weildesc
