#include "weildesc/checks.hpp"

#include "weildesc/error.hpp"
#include "weildesc/oracle.hpp"

namespace weildesc {

namespace {

std::vector<std::string> sample_vars(const CheckContext& ctx) {
  return ctx.vars.empty() ? std::vector<std::string>{"x"} : ctx.vars;
}

/// Runs body, turning a library error into a failed suite.
template <class F>
SuiteResult guarded(std::string name, F&& body) {
  SuiteResult r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const Error& e) {
    r.passed = false;
    r.witness = std::string("error after ") + std::to_string(r.cases) + " cases: " + e.what();
  }
  return r;
}

Components struct_const_product(const Components& f, const Components& g, const Extension& e) {
  Components out(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j)
      for (std::size_t k = 0; k < e.dim(); ++k)
        if (!e.c(i, j, k).is_zero()) out[k] += scale(f[i] * g[j], e.c(i, j, k));
  return out;
}

std::vector<GeoPoly> geometric_of(const DPolyB& f, const CheckContext& ctx, const std::vector<std::string>& vars) {
  return to_geometric_form(descend_system({f}, *ctx.ext, vars), *ctx.ext);
}

BPoint random_point(Sampler& rng, const Extension& e, const std::vector<std::string>& vars, bool constant) {
  BPoint p;
  for (const auto& v : vars)
    p[v] = constant ? BaseElem(static_cast<long>(rng.integer(-9, 9))) * e.one() : rng.ext_elem(e, {1, 1, 9});
  return p;
}

}  // namespace

SuiteResult suite_validate(const CheckContext& ctx) {
  return guarded("validate_extension", [&](SuiteResult& r) {
    const ValidationReport rep = validate_extension(*ctx.ext);
    r.cases = rep.invariants.size();
    if (const InvariantResult* bad = rep.first_failure()) {
      r.passed = false;
      std::string w;
      for (std::size_t k = 0; k < bad->witness.size(); ++k) w += (k ? "," : "") + std::to_string(bad->witness[k]);
      r.witness = bad->name + " fails at (" + w + ")" + (bad->detail.empty() ? "" : ": " + bad->detail);
    }
  });
}

SuiteResult suite_commuting_square(const CheckContext& ctx) {
  return guarded("commuting-square", [&](SuiteResult& r) {
    const Extension& e = *ctx.ext;
    const auto vars = sample_vars(ctx);
    Sampler rng(ctx.seed);
    std::vector<DPolyB> samples = ctx.equations;
    for (std::size_t t = 0; t < ctx.trials; ++t) samples.push_back(rng.dpoly_B(e, vars, ctx.bounds));
    for (const DPolyB& f : samples) {
      for (std::size_t k = 0; k < e.base().num_derivations(); ++k) {
        ++r.cases;
        if (check_prolongation_identity(f, e, k).ok) continue;
        const DPolyB g = shrink_terms(f, [&](const DPolyB& h) { return !check_prolongation_identity(h, e, k).ok; });
        const ProlongationCheck c = check_prolongation_identity(g, e, k);
        r.passed = false;
        r.witness = "f = " + render(g, e) + ", derivation " + e.base().derivation_name(k) + ", component " +
                    std::to_string(c.component) + (c.detail.empty() ? "" : ": " + c.detail);
        return;
      }
    }
  });
}

SuiteResult suite_ring_hom(const CheckContext& ctx) {
  return guarded("ring-hom", [&](SuiteResult& r) {
    const Extension& e = *ctx.ext;
    const auto vars = sample_vars(ctx);
    Sampler rng(ctx.seed + 1);
    auto holds = [&](const DPolyB& f, const DPolyB& g) {
      return unit_expand(mul(f, g, e), e) == struct_const_product(unit_expand(f, e), unit_expand(g, e), e);
    };
    for (std::size_t t = 0; t < ctx.trials; ++t) {
      const DPolyB f = rng.dpoly_B(e, vars, ctx.pair_bounds), g = rng.dpoly_B(e, vars, ctx.pair_bounds);
      ++r.cases;
      if (holds(f, g)) continue;
      const DPolyB f2 = shrink_terms(f, [&](const DPolyB& h) { return !holds(h, g); });
      const DPolyB g2 = shrink_terms(g, [&](const DPolyB& h) { return !holds(f2, h); });
      r.passed = false;
      r.witness = "f = " + render(f2, e) + ", g = " + render(g2, e);
      return;
    }
  });
}

SuiteResult suite_bracket_linearity(const CheckContext& ctx) {
  return guarded("bracket/linearity", [&](SuiteResult& r) {
    const Extension& e = *ctx.ext;
    const std::size_t n = e.base().num_derivations();
    if (n == 0) {
      r.notes.push_back("no derivations declared");
      return;
    }
    const auto vars = sample_vars(ctx);
    Sampler rng(ctx.seed + 2);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k1 = 0; k1 < n; ++k1)
      for (std::size_t k2 = k1 + 1; k2 < n; ++k2) pairs.emplace_back(k1, k2);
    if (pairs.empty()) {
      pairs.emplace_back(0, 0);
      r.notes.push_back("single derivation: bracket [d,d] and linearity with k1 = k2");
    }
    auto fail = [&](const std::string& what, const DPolyA& g) {
      r.passed = false;
      r.witness = what + " fails on " + render(g, e.base());
    };

    std::vector<DPolyA> samples;
    for (const auto& v : vars)
      for (const auto& th : indices_up_to(n, 2))
        for (std::size_t i = 1; i <= e.dim(); ++i) samples.push_back(dpoly_var(VarRefA{v, th, i}));
    const std::size_t fixed = samples.size();
    for (std::size_t t = 0; t < std::max<std::size_t>(ctx.trials / 2, 1); ++t)
      samples.push_back(rng.dpoly_A(e, vars, ctx.bounds));

    for (const auto& [k1, k2] : pairs) {
      const std::string tag = "[" + e.base().derivation_name(k1) + "," + e.base().derivation_name(k2) + "]";
      for (const DPolyA& g : samples) {
        ++r.cases;
        if (check_bracket(e, k1, k2, g)) continue;
        fail("bracket " + tag, shrink_terms(g, [&](const DPolyA& h) { return !check_bracket(e, k1, k2, h); }));
        return;
      }
      for (std::size_t s = fixed; s < samples.size(); ++s) {
        const BaseElem a1 = rng.base_elem(e.base().num_vars(), ctx.bounds.coeff);
        const BaseElem a2 = rng.base_elem(e.base().num_vars(), ctx.bounds.coeff);
        ++r.cases;
        if (check_linearity(e, a1, a2, k1, k2, samples[s])) continue;
        fail("linearity " + tag + " with a1 = " + e.base().render(a1) + ", a2 = " + e.base().render(a2),
             shrink_terms(samples[s], [&](const DPolyA& h) { return !check_linearity(e, a1, a2, k1, k2, h); }));
        return;
      }
    }
  });
}

SuiteResult suite_oracle(const CheckContext& ctx) {
  return guarded("oracle-equivalence", [&](SuiteResult& r) {
    const Extension& e = *ctx.ext;
    const auto vars = sample_vars(ctx);
    Sampler rng(ctx.seed + 3);
    std::vector<DPolyB> samples = ctx.equations;
    for (std::size_t t = 0; t < ctx.trials; ++t) samples.push_back(rng.dpoly_B(e, vars, ctx.bounds));
    auto agrees = [&](const DPolyB& f) { return geometric_of(f, ctx, vars) == expand_and_collect(f, e); };
    for (const DPolyB& f : samples) {
      ++r.cases;
      if (agrees(f)) continue;
      const DPolyB g = shrink_terms(f, [&](const DPolyB& h) { return !agrees(h); });
      const auto ours = geometric_of(g, ctx, vars), ref = expand_and_collect(g, e);
      r.passed = false;
      r.witness = "f = " + render(g, e);
      for (std::size_t i = 0; i < ours.size(); ++i)
        if (!(ours[i] == ref[i]))
          r.witness += "; component " + std::to_string(i + 1) + ": descent gives " + render(ours[i], e.base()) +
                       ", oracle gives " + render(ref[i], e.base());
      return;
    }
  });
}

SuiteResult suite_correspondence(const CheckContext& ctx) {
  return guarded("correspondence", [&](SuiteResult& r) {
    const Extension& e = *ctx.ext;
    const auto vars = sample_vars(ctx);
    Sampler rng(ctx.seed + 4);
    PolyBounds flat = ctx.bounds;
    flat.order = 0;
    for (std::size_t t = 0; t < ctx.trials; ++t) {
      const DPolyB f = rng.dpoly_B(e, vars, flat);
      const BPoint p = random_point(rng, e, vars, false);
      ++r.cases;
      if (check_correspondence({f}, p, e).ok()) continue;
      const DPolyB g = shrink_terms(f, [&](const DPolyB& h) { return !check_correspondence({h}, p, e).ok(); });
      r.passed = false;
      r.witness = "f = " + render(g, e) + " at";
      for (const auto& [v, u] : p) r.witness += " " + v + " = " + e.render(u);
      return;
    }
    if (ctx.equations.empty()) return;

    std::vector<GeoPoly> geo;
    for (const DPolyB& f : ctx.equations) {
      const auto g = geometric_of(f, ctx, ctx.vars);
      geo.insert(geo.end(), g.begin(), g.end());
    }
    std::size_t vanishing = 0;
    const std::size_t points = std::max<std::size_t>(ctx.trials / 2, 1);
    for (std::size_t t = 0; t < points; ++t) {
      const BPoint p = random_point(rng, e, ctx.vars, t % 5 == 0);
      const DifferentialPointReport rep = check_differential_point(ctx.equations, geo, p, e);
      ++r.cases;
      vanishing += rep.original_vanishes;
      if (rep.ok()) continue;
      r.passed = false;
      r.witness = std::string(rep.verdicts_agree() ? "coordinates differ" : "verdicts differ") + " at";
      for (const auto& [v, u] : p) r.witness += " " + v + " = " + e.render(u);
      return;
    }
    r.notes.push_back(std::to_string(points) + " differential points, " + std::to_string(vanishing) + " on the system");
    if (ctx.point) {
      const DifferentialPointReport rep = check_differential_point(ctx.equations, geo, *ctx.point, e);
      ++r.cases;
      r.notes.push_back(std::string("given point: original ") + (rep.original_vanishes ? "vanishes" : "does not vanish") +
                        ", descended " + (rep.descended_vanishes ? "vanishes" : "does not vanish"));
      if (!rep.ok()) {
        r.passed = false;
        r.witness = "given point: verdicts or coordinates disagree";
      }
    }
  });
}

std::vector<SuiteResult> run_check_suites(const CheckContext& ctx) {
  std::vector<SuiteResult> out{suite_validate(ctx)};
  using Suite = SuiteResult (*)(const CheckContext&);
  const Suite rest[] = {suite_commuting_square, suite_ring_hom, suite_bracket_linearity, suite_oracle,
                        suite_correspondence};
  const char* names[] = {"commuting-square", "ring-hom", "bracket/linearity", "oracle-equivalence", "correspondence"};
  for (std::size_t s = 0; s < 5; ++s) {
    if (out.front().passed) {
      out.push_back(rest[s](ctx));
    } else {
      SuiteResult r;
      r.name = names[s];
      r.passed = false;
      r.skipped = true;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace weildesc
