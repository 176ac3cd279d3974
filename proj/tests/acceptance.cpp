// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "weildesc/commands.hpp"
#include "weildesc/error.hpp"
#include "weildesc/oracle.hpp"
#include "weildesc/points.hpp"
#include "weildesc/random.hpp"

using namespace weildesc;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

const PolyBounds kPoly{3, 2, 4, ElemBounds{}};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome example_reproduction() {
  Outcome o;
  const std::string path = std::string(WEILDESC_DATA_DIR) + "/example1.json";
  const auto start = Clock::now();
  std::ostringstream out, err;
  DescendArgs args;
  args.input = path;
  args.geometric = true;
  const int code = cmd_descend(args, out, err);
  const double secs = seconds_since(start);
  if (code != 0) o.fail("exit " + std::to_string(code) + ": " + err.str());
  if (out.str() != "d(x_1) = 0\nd(x_2) + (1/(2*t))*x_2 = 0\n") o.fail("output was: " + out.str());
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(secs * 1000) + " ms";
  return o;
}

Outcome constant_basis() {
  Outcome o;
  for (const Extension& e : {sqrt_m1(), split_plain(), sqrt_m1(field_ts())}) {
    std::vector<std::uint32_t> theta(e.base().num_derivations(), 0);
    theta[0] = 1;
    const DPolyB f = xB(e, "x", theta);
    const DescendedSystem sys = descend_system({f}, e, {"x"});
    for (const auto& entry : sys.derivation_table) {
      const VarRefA want{entry.var.name, entry.var.theta.incremented(entry.derivation), entry.var.component};
      if (!(entry.value == dpoly_var(want))) o.fail("table entry for " + render_var(entry.var) + " is " + render(entry.value, e.base()));
    }
    if (sys.derivation_table.empty()) o.fail("empty derivation table");
  }
  const Extension e = sqrt_m1();
  std::vector<std::string> geo;
  for (const auto& g : to_geometric_form(descend_system({xB(e, "x", {1})}, e, {"x"}), e)) geo.push_back(render(g, e.base()));
  if (geo != std::vector<std::string>{"d(x_1)", "d(x_2)"}) o.fail("geometric output differs");
  return o;
}

Outcome commuting_square() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t cases = 0;
  int which = 0;
  for (const Extension& e : {sqrt_t(), cbrt_t(), split_twisted()}) {
    Sampler rng(1000 + which++);
    for (int trial = 0; trial < 100; ++trial) {
      const DPolyB f = rng.dpoly_B(e, {"x", "y"}, kPoly);
      const ProlongationCheck r = check_prolongation_identity(f, e, 0);
      ++cases;
      if (!r.ok) o.fail("extension " + std::to_string(which) + " trial " + std::to_string(trial) + ": " + r.detail);
    }
  }
  const Extension e = sqrt_t();
  DescentDerivation d = DescentDerivation::basic(e, 0);
  d.scalars[1][1] = d.scalars[1][1] + q(1);
  if (check_prolongation_identity(xB(e), e, 0, d, e.derivation_matrix(0)).ok) o.fail("perturbed scalar not detected");
  const double secs = seconds_since(start);
  if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cases) + " polynomials, " + std::to_string(secs) + " s";
  return o;
}

Outcome ring_homomorphism() {
  Outcome o;
  int which = 0;
  for (const Extension& e : {sqrt_t(), cbrt_t(), split_twisted()}) {
    Sampler rng(2000 + which++);
    for (int trial = 0; trial < 100; ++trial) {
      const DPolyB f = rng.dpoly_B(e, {"x", "y"}, kPoly), g = rng.dpoly_B(e, {"x", "y"}, kPoly);
      const Components uf = unit_expand(f, e), ug = unit_expand(g, e);
      Components expected(e.dim());
      for (std::size_t i = 0; i < e.dim(); ++i)
        for (std::size_t j = 0; j < e.dim(); ++j)
          for (std::size_t k = 0; k < e.dim(); ++k) expected[k] += scale(uf[i] * ug[j], e.c(i, j, k));
      if (!(unit_expand(mul(f, g, e), e) == expected))
        o.fail("extension " + std::to_string(which) + " trial " + std::to_string(trial));
    }
  }
  return o;
}

Outcome lie_and_linearity() {
  Outcome o;
  const BaseField f = field_ts();
  for (const Extension& e : {sqrt_t(f), cbrt_t(f)}) {
    if (e.commutation_witness()) o.fail("derivations do not commute on B");
    std::size_t vars = 0;
    for (const auto& th : indices_up_to(2, 2))
      for (std::size_t i = 1; i <= e.dim(); ++i, ++vars)
        if (!check_bracket(e, 0, 1, dpoly_var(VarRefA{"x", th, i}))) o.fail("bracket on x.@" + std::to_string(i));
    Sampler rng(3000 + e.dim());
    for (int trial = 0; trial < 50; ++trial) {
      const DPolyA g = rng.dpoly_A(e, {"x", "y"}, kPoly);
      if (!check_bracket(e, 0, 1, g)) o.fail("bracket on sample " + std::to_string(trial));
      const BaseElem a1 = rng.base_elem(2), a2 = rng.base_elem(2);
      if (!check_linearity(e, a1, a2, 0, 1, g)) o.fail("linearity on sample " + std::to_string(trial));
    }
    if (vars != 6 * e.dim()) o.fail("variable count");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int which = 0;
  for (const Extension& e : {sqrt_t(), cbrt_t(), split_twisted(), sqrt_t(field_ts())}) {
    Sampler rng(4000 + which++);
    for (int trial = 0; trial < 100; ++trial) {
      const DPolyB f = rng.dpoly_B(e, {"x", "y"}, kPoly);
      if (!(to_geometric_form(descend_system({f}, e, {"x", "y"}), e) == expand_and_collect(f, e)))
        o.fail("extension " + std::to_string(which) + " trial " + std::to_string(trial) + ": " + render(f, e));
    }
  }
  return o;
}

Outcome point_correspondence() {
  Outcome o;
  PolyBounds flat = kPoly;
  flat.order = 0;
  int which = 0;
  for (const Extension& e : {sqrt_t(), cbrt_t(), split_twisted()}) {
    Sampler rng(5000 + which++);
    for (int trial = 0; trial < 100; ++trial) {
      const DPolyB f = rng.dpoly_B(e, {"x", "y"}, flat);
      const BPoint p{{"x", rng.ext_elem(e)}, {"y", rng.ext_elem(e)}};
      if (!check_correspondence({f}, p, e).ok()) o.fail("evaluation identity, trial " + std::to_string(trial));
    }
  }

  const Extension e = sqrt_t();
  const std::vector<DPolyB> system{xB(e, "x", {1})};
  const std::vector<GeoPoly> geo = to_geometric_form(descend_system(system, e, {"x"}), e);
  Sampler rng(5100);
  std::size_t on_system = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // Every fifth point is a constant of B, which lies on the system.
    const ExtElem u = trial % 5 == 0 ? BaseElem(static_cast<long>(rng.integer(-9, 9))) * e.one() : rng.ext_elem(e);
    const DifferentialPointReport r = check_differential_point(system, geo, BPoint{{"x", u}}, e);
    on_system += r.original_vanishes;
    if (!r.ok()) o.fail("differential point " + std::to_string(trial) + ": " + e.render(u));
  }
  if (on_system == 0) o.fail("no sampled point lies on the system");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(on_system) + "/50 points on the system";
  return o;
}

Outcome extension_validity() {
  Outcome o;
  for (const Extension& e : {sqrt_t(), cbrt_t(), sqrt_m1()}) {
    const ValidationReport rep = validate_extension(e);
    if (rep.invariants.size() != 5) o.fail(std::to_string(rep.invariants.size()) + " invariants checked");
    if (const InvariantResult* bad = rep.first_failure()) o.fail(bad->name + " fails");
  }
  try {
    ext_from_minpoly(field_t(), "b", {q(0), q(0), q(1)});
    o.fail("b^2 accepted");
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotSeparable) o.fail(std::string("b^2 raised ") + err.what());
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 example reproduction", example_reproduction},
      {"2 constant-basis specialization", constant_basis},
      {"3 commuting square", commuting_square},
      {"4 ring homomorphism of the unit", ring_homomorphism},
      {"5 Lie bracket and linearity", lie_and_linearity},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 point correspondence", point_correspondence},
      {"8 extension validity", extension_validity},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : " (" + o.detail + ")") << " ["
              << seconds_since(start) << " s]" << std::endl;
  }
  std::cout << 8 - failed << "/8 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
