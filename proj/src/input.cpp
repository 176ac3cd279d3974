#include "weildesc/input.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "weildesc/error.hpp"
#include "weildesc/expr.hpp"

namespace weildesc {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

void allow_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(where + " must be an object");
  for (const auto& [k, _] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      bad(where + ": unknown key '" + k + "'");
}

const Json& required(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) bad(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> names_at(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string s = string_at(j[i], where + "[" + std::to_string(i) + "]");
    if (!is_identifier(s)) bad(where + ": '" + s + "' is not an identifier");
    out.push_back(std::move(s));
  }
  return out;
}

const Json& array_of_size(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where + " must be an array of length " + std::to_string(n));
  return j;
}

/// Runs f, prefixing any library error with the JSON location.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw Error(e.kind(), where + ": " + msg);
  }
}

BaseField parse_base(const Json& j) {
  allow_keys(j, "base", {"vars", "derivations"});
  const auto vars = names_at(required(j, "vars", "base"), "base.vars");
  std::vector<BaseDerivation> derivs;
  if (j.contains("derivations")) {
    const Json& d = j.at("derivations");
    if (!d.is_object()) bad("base.derivations must be an object");
    const Alphabet alpha{vars, {}};
    const BaseField plain(vars, {});
    for (const auto& [name, images] : d.items()) {
      const std::string where = "base.derivations." + name;
      if (!is_identifier(name)) bad(where + ": derivation name is not an identifier");
      if (!images.is_object()) bad(where + " must map variables to expressions");
      BaseDerivation der{name, std::vector<BaseElem>(vars.size())};
      for (const auto& [v, src] : images.items()) {
        const auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) bad(where + ": unknown base variable '" + v + "'");
        const std::string s = string_at(src, where + "." + v);
        der.images[static_cast<std::size_t>(it - vars.begin())] =
            at(where + "." + v, [&] { return lower_base(parse_expr(s, alpha), plain); });
      }
      derivs.push_back(std::move(der));
    }
  }
  return BaseField(vars, std::move(derivs));
}

Extension parse_extension(const Json& j, const BaseField& base, TableValidation validation) {
  if (!j.is_object()) bad("extension must be an object");
  const std::string kind = string_at(required(j, "kind", "extension"), "extension.kind");
  const Alphabet balpha = base_alphabet(base);
  auto base_expr = [&](const Json& v, const std::string& where) {
    const std::string s = string_at(v, where);
    return at(where, [&] { return lower_base(parse_expr(s, balpha), base); });
  };

  if (kind == "minpoly") {
    allow_keys(j, "extension", {"kind", "gen", "poly"});
    const std::string gen = string_at(required(j, "gen", "extension"), "extension.gen");
    if (!is_identifier(gen)) bad("extension.gen: '" + gen + "' is not an identifier");
    const std::string src = string_at(required(j, "poly", "extension"), "extension.poly");
    Alphabet alpha = balpha;
    alpha.identifiers.push_back(gen);
    return at("extension.poly", [&] { return ext_from_minpoly(base, gen, lower_minpoly(parse_expr(src, alpha), base, gen)); });
  }
  if (kind != "table") bad("extension.kind must be \"minpoly\" or \"table\", not \"" + kind + "\"");

  allow_keys(j, "extension", {"kind", "basis", "mul", "unit", "delta"});
  auto basis = names_at(required(j, "basis", "extension"), "extension.basis");
  const std::size_t l = basis.size();
  if (l == 0) bad("extension.basis must not be empty");

  const Json& mj = array_of_size(required(j, "mul", "extension"), l, "extension.mul");
  StructureConstants c(l, std::vector<std::vector<BaseElem>>(l, std::vector<BaseElem>(l)));
  for (std::size_t a = 0; a < l; ++a) {
    const std::string wa = "extension.mul[" + std::to_string(a) + "]";
    array_of_size(mj[a], l, wa);
    for (std::size_t b = 0; b < l; ++b) {
      const std::string wb = wa + "[" + std::to_string(b) + "]";
      array_of_size(mj[a][b], l, wb);
      for (std::size_t k = 0; k < l; ++k) c[a][b][k] = base_expr(mj[a][b][k], wb + "[" + std::to_string(k) + "]");
    }
  }

  const Json& uj = array_of_size(required(j, "unit", "extension"), l, "extension.unit");
  std::vector<BaseElem> unit(l);
  for (std::size_t i = 0; i < l; ++i) unit[i] = base_expr(uj[i], "extension.unit[" + std::to_string(i) + "]");

  std::vector<BaseMatrix> delta(base.num_derivations(), BaseMatrix(l, std::vector<BaseElem>(l)));
  if (j.contains("delta")) {
    const Json& dj = j.at("delta");
    if (!dj.is_object()) bad("extension.delta must be an object keyed by derivation");
    for (const auto& [name, m] : dj.items()) {
      const std::string where = "extension.delta." + name;
      const std::size_t k = at(where, [&] { return base.derivation_index(name); });
      array_of_size(m, l, where);
      for (std::size_t r = 0; r < l; ++r) {
        array_of_size(m[r], l, where + "[" + std::to_string(r) + "]");
        for (std::size_t col = 0; col < l; ++col)
          delta[k][r][col] = base_expr(m[r][col], where + "[" + std::to_string(r) + "][" + std::to_string(col) + "]");
      }
    }
  }
  if (validation == TableValidation::Strict)
    return at("extension", [&] { return ext_from_table(base, basis, std::move(c), std::move(unit), std::move(delta)); });
  return Extension(base, std::move(basis), std::move(c), std::move(unit), std::move(delta));
}

void check_identifiers(const InputSpec& spec) {
  const Extension& e = spec.extension();
  std::vector<std::string> all = spec.base.var_names();
  for (const auto& d : spec.base.derivations()) all.push_back(d.name);
  if (e.generator()) {
    all.push_back(*e.generator());
  } else {
    all.insert(all.end(), e.basis_names().begin(), e.basis_names().end());
  }
  all.insert(all.end(), spec.vars.begin(), spec.vars.end());
  std::set<std::string> seen;
  for (const auto& s : all)
    if (!seen.insert(s).second) bad("identifier '" + s + "' is declared more than once");
  for (const auto& v : spec.vars)
    for (std::size_t i = 1; i <= e.dim(); ++i) {
      const std::string y = v + "_" + std::to_string(i);
      if (seen.count(y)) bad("identifier '" + y + "' collides with the geometric name of component " + std::to_string(i) + " of " + v);
    }
}

InputOptions parse_options(const Json& j) {
  allow_keys(j, "options", {"prolong", "geometric", "seed", "trials"});
  InputOptions o;
  auto count = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("options.") + key + " must be a non-negative integer");
    out = static_cast<std::remove_reference_t<decltype(out)>>(v.get<unsigned long long>());
  };
  count("prolong", o.prolong);
  count("seed", o.seed);
  count("trials", o.trials);
  if (j.contains("geometric")) {
    if (!j.at("geometric").is_boolean()) bad("options.geometric must be a boolean");
    o.geometric = j.at("geometric").get<bool>();
  }
  return o;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

InputSpec parse_input(std::string_view json_text, TableValidation validation) {
  const Json root = parse_json(json_text);
  allow_keys(root, "input", {"base", "extension", "system", "options"});
  InputSpec spec;
  spec.base = parse_base(required(root, "base", "input"));
  spec.ext.emplace(parse_extension(required(root, "extension", "input"), spec.base, validation));

  if (root.contains("system")) {
    const Json& s = root.at("system");
    allow_keys(s, "system", {"vars", "equations"});
    spec.vars = names_at(required(s, "vars", "system"), "system.vars");
    check_identifiers(spec);
    if (s.contains("equations")) {
      const Json& eqs = s.at("equations");
      if (!eqs.is_array()) bad("system.equations must be an array of expressions");
      const Alphabet alpha = system_alphabet(spec.extension(), spec.vars);
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        const std::string where = "system.equations[" + std::to_string(i) + "]";
        std::string src = string_at(eqs[i], where);
        spec.equations.push_back(at(where, [&] { return lower_dpoly(parse_expr(src, alpha), spec.extension(), spec.vars); }));
        spec.equation_sources.push_back(std::move(src));
      }
    }
  } else {
    check_identifiers(spec);
  }
  if (root.contains("options")) spec.options = parse_options(root.at("options"));

  if (spec.base.num_derivations() > 1)
    if (const auto w = spec.extension().commutation_witness()) {
      const auto& names = spec.base.derivations();
      throw Error(ErrorKind::NonCommutingDerivations,
                  names[(*w)[0]].name + " and " + names[(*w)[1]].name + " do not commute");
    }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputSpec load_input(const std::string& path, TableValidation validation) {
  return parse_input(read_file(path), validation);
}

BPoint parse_point(std::string_view json_text, const Extension& e, const std::vector<std::string>& vars) {
  const Json root = parse_json(json_text);
  if (!root.is_object()) bad("point must be an object from variable to expression");
  const Alphabet alpha = ext_alphabet(e);
  BPoint p;
  for (const auto& [name, src] : root.items()) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) bad("point: '" + name + "' is not a system variable");
    const std::string s = string_at(src, "point." + name);
    p[name] = at("point." + name, [&] { return lower_ext(parse_expr(s, alpha), e); });
  }
  return p;
}

BPoint load_point(const std::string& path, const Extension& e, const std::vector<std::string>& vars) {
  return parse_point(read_file(path), e, vars);
}

}  // namespace weildesc
