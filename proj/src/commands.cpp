#include "weildesc/commands.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"
#include "weildesc/checks.hpp"
#include "weildesc/error.hpp"
#include "weildesc/selftest.hpp"

namespace weildesc {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownIdentifier:
    case ErrorKind::NonIntegerExponent:
    case ErrorKind::DivisionByVariable:
    case ErrorKind::InvalidInput:
    case ErrorKind::UnknownDerivation:
    case ErrorKind::NonCommutingDerivations:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

DescendOutput run_descend(const InputSpec& spec, bool geometric, std::uint32_t prolong) {
  const Extension& e = spec.extension();
  const std::size_t l = e.dim(), n = e.base().num_derivations();
  DescendOutput out;
  out.system = descend_system(spec.equations, e, spec.vars);

  for (std::size_t q = 0; q < spec.equations.size() && prolong > 0; ++q) {
    std::map<DerivIndex, DPolyB> derived{{DerivIndex::zero(n), spec.equations[q]}};
    for (const DerivIndex& alpha : indices_up_to(n, prolong)) {
      if (alpha.is_zero()) continue;
      std::size_t k = 0;
      while (alpha[k] == 0) ++k;
      const DPolyB& parent = derived.at(alpha.decremented(k));
      const ProlongationCheck c = check_prolongation_identity(parent, e, k);
      if (!c.ok)
        throw Error(ErrorKind::InvalidAlgebra, "prolongation of equation " + std::to_string(q + 1) + " along " +
                                                   e.base().derivation_name(k) + " disagrees with the descent derivation in component " +
                                                   std::to_string(c.component));
      const DPolyB& f = derived.emplace(alpha, natural_derive_B(parent, e, k)).first->second;
      const Components g = unit_expand(f, e);
      for (std::size_t i = 0; i < l; ++i) out.prolongation.push_back({q + 1, alpha, i + 1, g[i]});
    }
  }

  if (geometric) {
    const auto geo = to_geometric_form(out.system, e);
    for (std::size_t idx = 0; idx < geo.size(); ++idx)
      out.geometric.push_back({idx / l + 1, DerivIndex::zero(n), idx % l + 1, geo[idx]});
    GeometricRewriter rw(e);
    for (const auto& p : out.prolongation) out.geometric.push_back({p.equation, p.theta, p.component, rw.rewrite(p.poly)});
  }
  return out;
}

std::string format_text(const DescendOutput& out, const Extension& e) {
  const BaseField& base = e.base();
  std::string s;
  if (!out.geometric.empty()) {
    for (const auto& g : out.geometric) s += render(g.poly, base) + " = 0\n";
    return s;
  }
  s += "# generators\n";
  for (const auto& g : out.system.generators) s += render(g.poly, base) + " = 0\n";
  if (!out.prolongation.empty()) {
    s += "# prolongation\n";
    for (const auto& p : out.prolongation) s += render(p.poly, base) + " = 0\n";
  }
  s += "# derivation table\n";
  for (const auto& t : out.system.derivation_table)
    s += base.derivation_name(t.derivation) + "^W(" + render_var(t.var) + ") = " + render(t.value, base) + "\n";
  return s;
}

std::string format_json(const DescendOutput& out, const Extension& e) {
  using Json = nlohmann::ordered_json;
  const BaseField& base = e.base();
  auto theta = [](const DerivIndex& th) { return Json(th.orders()); };

  Json gens = Json::array();
  for (const auto& g : out.system.generators)
    gens.push_back({{"equation", g.equation}, {"component", g.component}, {"poly", render(g.poly, base)}});

  Json table = Json::array();
  for (const auto& t : out.system.derivation_table)
    table.push_back({{"derivation", base.derivation_name(t.derivation)},
                     {"var", {{"name", t.var.name}, {"theta", theta(t.var.theta)}, {"component", t.var.component}}},
                     {"value", render(t.value, base)}});

  Json doc;
  doc["generators"] = std::move(gens);
  doc["derivation_table"] = std::move(table);
  if (!out.prolongation.empty()) {
    Json pro = Json::array();
    for (const auto& p : out.prolongation)
      pro.push_back({{"equation", p.equation}, {"theta", theta(p.theta)}, {"component", p.component},
                     {"poly", render(p.poly, base)}});
    doc["prolongation"] = std::move(pro);
  }
  Json geo = Json::array();
  for (const auto& g : out.geometric)
    geo.push_back({{"equation", g.equation}, {"theta", theta(g.theta)}, {"component", g.component},
                   {"poly", render(g.poly, base)}});
  doc["geometric"] = std::move(geo);
  return doc.dump(2) + "\n";
}

namespace {

template <class F>
int reporting_errors(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace

int cmd_descend(const DescendArgs& args, std::ostream& out, std::ostream& err) {
  return reporting_errors(err, [&] {
    const InputSpec spec = load_input(args.input);
    const DescendOutput result =
        run_descend(spec, args.geometric || spec.options.geometric, args.prolong.value_or(spec.options.prolong));
    const std::string text = args.json ? format_json(result, spec.extension()) : format_text(result, spec.extension());
    if (args.output.empty()) {
      out << text;
      return int(kExitOk);
    }
    std::ofstream file(args.output, std::ios::binary);
    if (!(file << text)) throw Error(ErrorKind::InvalidInput, "cannot write '" + args.output + "'");
    return int(kExitOk);
  });
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return reporting_errors(err, [&] {
    const InputSpec spec = load_input(args.input, TableValidation::Deferred);
    CheckContext ctx;
    ctx.ext = &spec.extension();
    ctx.vars = spec.vars;
    ctx.equations = spec.equations;
    ctx.trials = args.trials.value_or(spec.options.trials);
    ctx.seed = seed_from_env(args.seed.value_or(spec.options.seed));
    if (!args.point.empty()) ctx.point = load_point(args.point, spec.extension(), spec.vars);

    out << "seed " << ctx.seed << ", " << ctx.trials << " trials\n";
    std::size_t failed = 0, skipped = 0;
    for (const SuiteResult& r : run_check_suites(ctx)) {
      if (r.skipped) {
        out << "SKIP " << r.name << " (extension is invalid)\n";
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      }
      for (const auto& note : r.notes) out << "  note: " << note << "\n";
      if (!r.passed && !r.skipped) out << "  witness: " << r.witness << "\n";
      failed += !r.passed && !r.skipped;
      skipped += r.skipped;
    }
    if (failed + skipped == 0) {
      out << "all suites passed\n";
      return int(kExitOk);
    }
    out << failed << " suite(s) failed, " << skipped << " skipped\n";
    return int(kExitFailure);
  });
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  return reporting_errors(err, [&] {
    std::size_t failed = 0;
    const auto cases = run_selftest();
    for (const SelftestCase& c : cases) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
      out << "\n";
      failed += !c.passed;
    }
    out << cases.size() - failed << "/" << cases.size() << " selftest cases passed\n";
    return int(failed == 0 ? kExitOk : kExitFailure);
  });
}

}  // namespace weildesc
