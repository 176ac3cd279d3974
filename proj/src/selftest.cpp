#include "weildesc/selftest.hpp"

#include <functional>

#include "weildesc/commands.hpp"
#include "weildesc/error.hpp"
#include "weildesc/expr.hpp"
#include "weildesc/oracle.hpp"

namespace weildesc {

const char* const kSquareRootExample = R"({
  "base": {"vars": ["t"], "derivations": {"d": {"t": "1"}}},
  "extension": {"kind": "minpoly", "gen": "b", "poly": "b^2 - t"},
  "system": {"vars": ["x"], "equations": ["x'"]}
})";

namespace {

const char* const kTrivialExample = R"({
  "base": {"vars": ["t"], "derivations": {"d": {"t": "1"}}},
  "extension": {"kind": "minpoly", "gen": "b", "poly": "b - t"},
  "system": {"vars": ["x"], "equations": ["x*d(x) - t*x^2 + 3"]}
})";

BaseElem t() { return BaseElem::variable(0); }
BaseElem frac(long n, long d) { return BaseElem(n) / BaseElem(d); }
BaseField field_t() { return BaseField({"t"}, {BaseDerivation{"d", {BaseElem(1)}}}); }
Extension sqrt_t() { return ext_from_minpoly(field_t(), "b", {-t(), BaseElem(0), BaseElem(1)}); }
Extension sqrt_m1() { return ext_from_minpoly(field_t(), "b", {BaseElem(1), BaseElem(0), BaseElem(1)}); }
Extension trivial() { return ext_from_minpoly(field_t(), "b", {-t(), BaseElem(1)}); }

StructureConstants split_table() {
  StructureConstants c(2, std::vector<std::vector<BaseElem>>(2, std::vector<BaseElem>(2)));
  c[0][0][0] = BaseElem(1);
  c[1][1][1] = BaseElem(1);
  return c;
}

Extension split_plain() {
  return ext_from_table(field_t(), {"e1", "e2"}, split_table(), {BaseElem(1), BaseElem(1)},
                        {BaseMatrix(2, std::vector<BaseElem>(2))});
}

ExtElem coords(BaseElem a, BaseElem b) { return ExtElem({std::move(a), std::move(b)}); }
DPolyB var(const Extension& e, std::uint32_t order = 0, const std::string& name = "x") {
  return dpoly_var(e, VarRefB{name, DerivIndex({order})});
}
DPolyA avar(std::uint32_t order, std::size_t i) { return dpoly_var(VarRefA{"x", DerivIndex({order}), i}); }

std::vector<std::string> rendered(const std::vector<GeoPoly>& geo, const BaseField& base) {
  std::vector<std::string> out;
  for (const auto& g : geo) out.push_back(render(g, base));
  return out;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

template <class F>
bool throws_kind(ErrorKind kind, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

class Runner {
 public:
  /// body returns an empty string on success, else a description of the mismatch.
  void run(const std::string& name, const std::function<std::string()>& body) {
    SelftestCase c{name, false, ""};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("unexpected error: ") + e.what();
    }
    cases.push_back(std::move(c));
  }
  void check(const std::string& name, const std::function<bool()>& body) {
    run(name, [&] { return body() ? std::string() : std::string("assertion does not hold"); });
  }

  std::vector<SelftestCase> cases;
};

std::string expect_eq(const std::string& got, const std::string& want) {
  return got == want ? std::string() : "got \"" + got + "\", expected \"" + want + "\"";
}

}  // namespace

std::vector<SelftestCase> run_selftest() {
  Runner r;
  const BaseField f = field_t();

  // Base field.
  r.check("t * t = t^2", [&] { return t() * t() == t().pow(2); });
  r.check("1 / t", [&] { return f.render(BaseElem(1) / t()) == "1/t"; });
  r.check("d(t) = 1", [&] { return f.derive(t(), "d") == BaseElem(1); });
  r.check("d(7/3) = 0", [&] { return f.derive(frac(7, 3), "d").is_zero(); });

  // Extensions.
  r.check("b^2 - t: basis (1, b), b*b = t, d(b) = b/(2t)", [&] {
    const Extension e = sqrt_t();
    return e.dim() == 2 && e.mul(e.basis(1), e.basis(1)) == t() * e.one() &&
           e.delta(e.basis(1), 0) == frac(1, 2) / t() * e.basis(1);
  });
  r.check("b - t: trivial extension with d(b) = 1", [&] {
    const Extension e = trivial();
    return e.dim() == 1 && e.delta(*e.generator_element(), 0) == e.one();
  });
  r.check("non-commutative table rejected", [&] {
    StructureConstants c = split_table();
    c[0][1][0] = BaseElem(1);
    return throws_kind(ErrorKind::InvalidAlgebra, [&] {
      ext_from_table(field_t(), {"e1", "e2"}, c, {BaseElem(1), BaseElem(1)}, {BaseMatrix(2, std::vector<BaseElem>(2))});
    });
  });
  r.check("split algebra with zero delta accepted", [&] { return validate_extension(split_plain()).ok(); });
  r.check("trivial extension passes all invariants", [&] { return validate_extension(trivial()).ok(); });
  r.check("b*b = (t, 0)", [&] {
    const Extension e = sqrt_t();
    return e.mul(e.basis(1), e.basis(1)) == coords(t(), 0);
  });
  r.check("1*u = u", [&] {
    const Extension e = sqrt_t();
    const ExtElem u = coords(t(), frac(3, 2));
    return e.mul(e.one(), u) == u;
  });
  r.check("inverse(1) = 1", [&] {
    const Extension e = sqrt_t();
    return e.inverse(e.one()) == e.one();
  });
  r.check("e1 is not invertible in A x A", [&] {
    const Extension e = split_plain();
    return throws_kind(ErrorKind::NotInvertible, [&] { e.inverse(e.basis(0)); });
  });
  r.check("d(b) = (0, 1/(2t))", [&] {
    const Extension e = sqrt_t();
    return e.delta(e.basis(1), 0) == coords(0, frac(1, 2) / t());
  });
  r.check("d(1) = 0", [&] { return sqrt_t().delta(sqrt_t().one(), 0).is_zero(); });
  r.check("lambda_2(d(b)) = 1/(2t)", [&] {
    const Extension e = sqrt_t();
    return e.lambda(e.delta(e.basis(1), 0), 2) == frac(1, 2) / t();
  });
  r.check("lambda_i(b_j) = [i = j]", [&] {
    const Extension e = sqrt_t();
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (e.lambda(e.basis(j), i) != BaseElem(i == j + 1 ? 1 : 0)) return false;
    return true;
  });

  // Differential polynomials.
  r.check("d(x) = x'", [&] {
    const Extension e = sqrt_t();
    return natural_derive_B(var(e), e, 0) == var(e, 1);
  });
  r.check("d(b*x) = (b/(2t))*x + b*x'", [&] {
    const Extension e = sqrt_t();
    const ExtElem b = e.basis(1);
    return natural_derive_B(scale(var(e), b, e), e, 0) ==
           scale(var(e), e.delta(b, 0), e) + scale(var(e, 1), b, e);
  });
  r.check("d(x^2) = 2*x*x'", [&] {
    const Extension e = sqrt_t();
    return natural_derive_B(mul(var(e), var(e), e), e, 0) == scale(mul(var(e), var(e, 1), e), BaseElem(2) * e.one(), e);
  });
  r.check("f + 0 = f", [&] {
    const Extension e = sqrt_t();
    return var(e) + DPolyB() == var(e);
  });
  r.check("x*x = x^2", [&] {
    const Extension e = sqrt_t();
    return render(mul(var(e), var(e), e), e) == "x^2";
  });
  r.check("x at x = 1 is 1", [&] {
    const Extension e = sqrt_t();
    return eval_B(var(e), {{VarRefB{"x", DerivIndex({0})}, e.one()}}, e) == e.one();
  });
  r.check("x^2 - t at x = b is 0", [&] {
    const Extension e = sqrt_t();
    const DPolyB g = mul(var(e), var(e), e) - dpoly_constant(t() * e.one());
    return eval_B(g, {{VarRefB{"x", DerivIndex({0})}, e.basis(1)}}, e).is_zero();
  });

  // Descent.
  r.check("unit expansion of x is (x.1, x.2)", [&] {
    const Extension e = sqrt_t();
    return unit_expand(var(e), e) == Components{avar(0, 1), avar(0, 2)};
  });
  r.check("constant basis: d^W(x.i@[n]) = x.i@[n+1]", [&] {
    const Extension e = sqrt_m1();
    for (std::uint32_t n = 0; n <= 2; ++n)
      for (std::size_t i = 1; i <= 2; ++i)
        if (descent_derivation_var(e, "x", DerivIndex({n}), i, 0) != avar(n + 1, i)) return false;
    return true;
  });
  r.check("d^W on a constant a is d(a)", [&] {
    const Extension e = sqrt_t();
    return apply_descent_derivation(DPolyA::constant(t().pow(3)), e, 0) == DPolyA::constant(BaseElem(3) * t().pow(2));
  });
  r.run("descent of x' = 0 over b^2 = t", [&] {
    const Extension e = sqrt_t();
    const DescendedSystem sys = descend_system({var(e, 1)}, e, {"x"});
    if (sys.generators.size() != 2 || sys.generators[0].poly != avar(1, 1) || sys.generators[1].poly != avar(1, 2))
      return std::string("generators differ from (x.1@[1], x.2@[1])");
    for (const auto& entry : sys.derivation_table)
      if (entry.value != descent_derivation_var(e, entry.var.name, entry.var.theta, entry.var.component, entry.derivation))
        return "table entry for " + render_var(entry.var) + " differs";
    return std::string();
  });
  r.check("empty system: no generators, table populated", [&] {
    const DescendedSystem sys = descend_system({}, sqrt_t(), {"x"});
    return sys.generators.empty() && !sys.derivation_table.empty();
  });
  r.run("geometric form over b^2 = t", [&] {
    const Extension e = sqrt_t();
    return expect_eq(joined(rendered(to_geometric_form(descend_system({var(e, 1)}, e, {"x"}), e), f)),
                     "d(x_1); d(x_2) + (1/(2*t))*x_2");
  });
  r.run("geometric form over a constant basis", [&] {
    const Extension e = sqrt_m1();
    return expect_eq(joined(rendered(to_geometric_form(descend_system({var(e, 1)}, e, {"x"}), e), f)), "d(x_1); d(x_2)");
  });
  r.run("geometric form over the trivial extension", [&] {
    const Extension e = trivial();
    const DPolyB g = mul(var(e), var(e, 1), e) - scale(mul(var(e), var(e), e), t() * e.one(), e) +
                     dpoly_constant(BaseElem(3) * e.one());
    return expect_eq(joined(rendered(to_geometric_form(descend_system({g}, e, {"x"}), e), f)), "x_1*d(x_1) - t*x_1^2 + 3");
  });
  r.check("prolongation identity for the constant 1", [&] {
    const Extension e = sqrt_t();
    return check_prolongation_identity(dpoly_constant(e.one()), e, 0).ok;
  });
  r.check("bracket of d/dt and d/ds vanishes", [&] {
    const BaseField ts({"t", "s"}, {BaseDerivation{"d1", {BaseElem(1), BaseElem(0)}},
                                    BaseDerivation{"d2", {BaseElem(0), BaseElem(1)}}});
    const Extension e = ext_from_minpoly(ts, "b", {BaseElem(1), BaseElem(0), BaseElem(1)});
    const DPolyA g = dpoly_var(VarRefA{"x", DerivIndex({1, 0}), 2}) * dpoly_var(VarRefA{"x", DerivIndex({0, 1}), 1}) +
                     DPolyA::constant(BaseElem::variable(0) * BaseElem::variable(1));
    return check_bracket(e, 0, 1, g);
  });
  r.check("counit over the trivial extension is the identity", [&] {
    const Extension e = trivial();
    const DPolyA g = avar(0, 1) * avar(1, 1) + DPolyA::constant(t());
    const APoly back = counit_poly(g, e);
    const APoly x0 = APoly::term(Monomial<VarRefB>(VarRefB{"x", DerivIndex({0})}), BaseElem(1));
    const APoly x1 = APoly::term(Monomial<VarRefB>(VarRefB{"x", DerivIndex({1})}), BaseElem(1));
    return back == x0 * x1 + APoly::constant(t());
  });
  r.check("identity morphism descends to the identity", [&] {
    const Extension e = sqrt_t();
    const MorphismDescent m = descend_morphism({{"x", var(e)}}, e, {"x"}, 2);
    for (const auto& [v, img] : m.images())
      if (img != dpoly_var(v)) return false;
    return !m.images().empty();
  });

  // Points.
  r.check("split of x = b is (0, 1)", [&] {
    const Extension e = sqrt_t();
    const APoint a = split_point({{"x", e.basis(1)}}, e);
    return a.at({"x", 1}).is_zero() && a.at({"x", 2}) == BaseElem(1);
  });
  r.check("split of x = 3 is (3, 0)", [&] {
    const Extension e = sqrt_t();
    const APoint a = split_point({{"x", BaseElem(3) * e.one()}}, e);
    return a.at({"x", 1}) == BaseElem(3) && a.at({"x", 2}).is_zero();
  });
  r.check("x^2 - t at x = b vanishes on both sides", [&] {
    const Extension e = sqrt_t();
    const DPolyB g = mul(var(e), var(e), e) - dpoly_constant(t() * e.one());
    const auto rep = check_correspondence({g}, {{"x", e.basis(1)}}, e);
    return rep.ok() && rep.entries[0].vanishes_over_B && rep.entries[0].vanishes_over_A;
  });
  r.check("x at x = 1: value 1, components (1, 0), nonvanishing", [&] {
    const Extension e = sqrt_t();
    const auto rep = check_correspondence({var(e)}, {{"x", e.one()}}, e);
    const auto& en = rep.entries[0];
    return rep.ok() && en.value == e.one() && en.components == std::vector<BaseElem>{1, 0} && !en.vanishes_over_B &&
           !en.vanishes_over_A;
  });
  r.check("differential point x = 0 has zero residuals", [&] {
    const Extension e = sqrt_t();
    const std::vector<DPolyB> fs{var(e, 1)};
    const auto geo = to_geometric_form(descend_system(fs, e, {"x"}), e);
    const auto rep = check_differential_point(fs, geo, {{"x", e.zero()}}, e);
    return rep.ok() && rep.residuals == std::vector<BaseElem>{0, 0};
  });

  // Expression front end.
  const Alphabet alpha{{"x", "t", "b", "x_2"}, {"d"}};
  r.check("parse x'", [&] { return parse_expr("x'", alpha) == ExprAst::dapp("d", ExprAst::var("x")); });
  r.check("parse b^2 - t", [&] {
    return parse_expr("b^2 - t", alpha) ==
           ExprAst::binary(ExprAst::Kind::Sub, ExprAst::pow(ExprAst::var("b"), 2), ExprAst::var("t"));
  });
  r.check("parse d(x_2) + x_2/(2*t)", [&] {
    using K = ExprAst::Kind;
    const ExprAst two_t = ExprAst::binary(K::Mul, ExprAst::number(2), ExprAst::var("t"));
    return parse_expr("d(x_2) + x_2/(2*t)", alpha) ==
           ExprAst::binary(K::Add, ExprAst::dapp("d", ExprAst::var("x_2")),
                           ExprAst::binary(K::Div, ExprAst::var("x_2"), two_t));
  });
  r.check("lower x' ", [&] {
    const Extension e = sqrt_t();
    return lower_dpoly(parse_expr("x' ", system_alphabet(e, {"x"})), e, {"x"}) == var(e, 1);
  });
  r.check("lower b*x", [&] {
    const Extension e = sqrt_t();
    return lower_dpoly(parse_expr("b*x", system_alphabet(e, {"x"})), e, {"x"}) == scale(var(e), coords(0, 1), e);
  });
  r.check("lower 1/(2*t)", [&] { return lower_base(parse_expr("1/(2*t)", base_alphabet(f)), f) == frac(1, 2) / t(); });

  // Command output.
  r.run("descend --geometric on the square-root example", [&] {
    const InputSpec spec = parse_input(kSquareRootExample);
    return expect_eq(format_text(run_descend(spec, true, 0), spec.extension()), "d(x_1) = 0\nd(x_2) + (1/(2*t))*x_2 = 0\n");
  });
  r.run("descend --prolong 1 adds two components", [&] {
    const InputSpec spec = parse_input(kSquareRootExample);
    const DescendOutput out = run_descend(spec, false, 1);
    const Components want = unit_expand(var(spec.extension(), 2), spec.extension());
    if (out.prolongation.size() != 2) return std::string("expected 2 prolonged components");
    for (std::size_t i = 0; i < 2; ++i)
      if (out.prolongation[i].poly != want[i]) return "component " + std::to_string(i + 1) + " differs";
    return std::string();
  });
  r.run("trivial extension reproduces the input", [&] {
    const InputSpec spec = parse_input(kTrivialExample);
    return expect_eq(format_text(run_descend(spec, true, 0), spec.extension()), "x_1*d(x_1) - t*x_1^2 + 3 = 0\n");
  });

  // Controls.
  r.run("printed-form coefficient disagrees with the oracle", [&] {
    const Extension e = sqrt_t();
    const DescendedSystem sys = descend_system({var(e, 1)}, e, {"x"});
    const auto printed = to_geometric_form(sys, e, printed_form_scalars(e));
    if (printed == expand_and_collect(var(e, 1), e))
      return "printed form unexpectedly matches: " + joined(rendered(printed, f));
    if (to_geometric_form(sys, e) != expand_and_collect(var(e, 1), e)) return std::string("delta form disagrees too");
    return std::string();
  });
  r.run("delta forced to zero gives d(x_1), d(x_2)", [&] {
    const Extension m = sqrt_t();
    const Extension e(m.base(), m.basis_names(), m.structure_constants(), m.unit_coords(),
                      {BaseMatrix(2, std::vector<BaseElem>(2))});
    return expect_eq(joined(rendered(to_geometric_form(descend_system({var(e, 1)}, e, {"x"}), e), f)), "d(x_1); d(x_2)");
  });
  return std::move(r.cases);
}

}  // namespace weildesc
