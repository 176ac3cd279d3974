#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "weildesc/descent.hpp"

namespace weildesc {

inline void PrintTo(const BaseElem& a, std::ostream* os) { *os << render(a, {}); }
inline void PrintTo(const ExtElem& u, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < u.coords.size(); ++i) *os << (i ? ", " : "") << render(u.coords[i], {});
  *os << ")";
}

}  // namespace weildesc

namespace fixtures {

using namespace weildesc;

inline BaseElem t() { return BaseElem::variable(0); }
inline BaseElem s() { return BaseElem::variable(1); }
inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline BaseElem q(long n, long d = 1) { return BaseElem(rat(n, d)); }

/// Q(t) with d(t) = 1.
inline BaseField field_t() { return BaseField({"t"}, {BaseDerivation{"d", {BaseElem(1)}}}); }

/// Q(t, s) with d1 = d/dt, d2 = d/ds.
inline BaseField field_ts() {
  return BaseField({"t", "s"}, {BaseDerivation{"d1", {BaseElem(1), BaseElem(0)}},
                                BaseDerivation{"d2", {BaseElem(0), BaseElem(1)}}});
}

/// b^2 = t.
inline Extension sqrt_t(const BaseField& f = field_t()) { return ext_from_minpoly(f, "b", {-t(), q(0), q(1)}); }
/// b^3 = t.
inline Extension cbrt_t(const BaseField& f = field_t()) {
  return ext_from_minpoly(f, "b", {-t(), q(0), q(0), q(1)});
}
/// b^2 = -1.
inline Extension sqrt_m1(const BaseField& f = field_t()) { return ext_from_minpoly(f, "b", {q(1), q(0), q(1)}); }
/// b = t.
inline Extension trivial(const BaseField& f = field_t()) { return ext_from_minpoly(f, "b", {-t(), q(1)}); }

inline StructureConstants split_table() {
  StructureConstants c(2, std::vector<std::vector<BaseElem>>(2, std::vector<BaseElem>(2, q(0))));
  c[0][0][0] = q(1);
  c[1][1][1] = q(1);
  return c;
}

/// A x A with zero derivation matrices.
inline Extension split_plain(const BaseField& f = field_t()) {
  std::vector<BaseMatrix> delta(f.num_derivations(), BaseMatrix(2, std::vector<BaseElem>(2, q(0))));
  return ext_from_table(f, {"e1", "e2"}, split_table(), {q(1), q(1)}, delta);
}

/// A x A in the basis (e1, w) with w = e1 + t e2, so delta(w) = d(t) e2 is nonzero.
inline Extension split_twisted(const BaseField& f = field_t()) {
  // e1*e1 = e1, e1*w = e1, w*w = (1 - t) e1 + t w.
  StructureConstants c(2, std::vector<std::vector<BaseElem>>(2, std::vector<BaseElem>(2, q(0))));
  c[0][0][0] = q(1);
  c[0][1][0] = q(1);
  c[1][0][0] = q(1);
  c[1][1][0] = q(1) - t();
  c[1][1][1] = t();
  // 1 = e1 + e2 = (1 - 1/t) e1 + (1/t) w.
  std::vector<BaseElem> unit = {q(1) - t().inverse(), t().inverse()};
  // delta(w) = d(t) (w - e1) / t.
  std::vector<BaseMatrix> delta;
  for (std::size_t k = 0; k < f.num_derivations(); ++k) {
    const BaseElem dt = f.derive(t(), k);
    delta.push_back({{q(0), -dt * t().inverse()}, {q(0), dt * t().inverse()}});
  }
  return ext_from_table(f, {"e1", "w"}, c, unit, delta);
}

inline VarRefB vb(const std::string& name, std::vector<std::uint32_t> theta) {
  return VarRefB{name, DerivIndex(std::move(theta))};
}
inline VarRefA va(const std::string& name, std::vector<std::uint32_t> theta, std::size_t i) {
  return VarRefA{name, DerivIndex(std::move(theta)), i};
}
inline DPolyB xB(const Extension& e, const std::string& name = "x", std::vector<std::uint32_t> theta = {0}) {
  return dpoly_var(e, vb(name, std::move(theta)));
}
inline DPolyA xA(const std::string& name, std::vector<std::uint32_t> theta, std::size_t i) {
  return dpoly_var(va(name, std::move(theta), i));
}
inline DPolyA constA(const BaseElem& a) { return DPolyA::constant(a); }

}  // namespace fixtures
