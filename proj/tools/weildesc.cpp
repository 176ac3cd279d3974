#include <iostream>

#include "CLI11.hpp"
#include "weildesc/commands.hpp"

int main(int argc, char** argv) {
  using namespace weildesc;
  CLI::App app{"Differential Weil descent of differential polynomial systems"};
  app.require_subcommand(1);

  DescendArgs descend;
  std::string format = "text";
  auto* d = app.add_subcommand("descend", "Emit the descended system and its derivation table");
  d->add_option("input", descend.input, "Input JSON file")->required();
  d->add_flag("--geometric", descend.geometric, "Also rewrite into base derivatives of x_1..x_l");
  d->add_option("--prolong", descend.prolong, "Emit components of all derivatives up to this order");
  d->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  d->add_option("--output,-o", descend.output, "Write to a file instead of stdout");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run the law-checking suites on an input");
  c->add_option("input", check.input, "Input JSON file")->required();
  c->add_option("--trials", check.trials, "Random samples per suite");
  c->add_option("--seed", check.seed, "Seed (WEILDESC_SEED overrides)");
  c->add_option("--point", check.point, "Point file to test against the system");

  app.add_subcommand("selftest", "Run the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*d) {
    descend.json = format == "json";
    return cmd_descend(descend, std::cout, std::cerr);
  }
  if (*c) return cmd_check(check, std::cout, std::cerr);
  return cmd_selftest(std::cout, std::cerr);
}
