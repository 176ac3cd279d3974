#pragma once

// The three CLI commands, independent of argument parsing so they can be
// driven from tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weildesc/error.hpp"
#include "weildesc/input.hpp"

namespace weildesc {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Input and usage problems map to kExitUsage, everything else to kExitFailure.
int exit_code_for(ErrorKind kind);

struct ProlongedGenerator {
  std::size_t equation;  // 1-based
  DerivIndex theta;
  std::size_t component;  // 1-based
  DPolyA poly;
};

struct GeometricEquation {
  std::size_t equation;
  DerivIndex theta;  // zero for the equations themselves
  std::size_t component;
  GeoPoly poly;
};

struct DescendOutput {
  DescendedSystem system;
  std::vector<ProlongedGenerator> prolongation;
  std::vector<GeometricEquation> geometric;
};

/// Components of d^alpha f for 1 <= |alpha| <= prolong are each cross-checked
/// with check_prolongation_identity (InvalidAlgebra on mismatch).
DescendOutput run_descend(const InputSpec& spec, bool geometric, std::uint32_t prolong);

/// With geometric equations present only those are printed, one "p = 0" per line.
std::string format_text(const DescendOutput& out, const Extension& e);
std::string format_json(const DescendOutput& out, const Extension& e);

struct DescendArgs {
  std::string input;
  bool geometric = false;
  std::optional<std::uint32_t> prolong;
  bool json = false;
  std::string output;  // empty: stdout
};

struct CheckArgs {
  std::string input;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::string point;  // optional point file
};

int cmd_descend(const DescendArgs& args, std::ostream& out, std::ostream& err);
/// WEILDESC_SEED overrides --seed, which overrides options.seed.
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest(std::ostream& out, std::ostream& err);

}  // namespace weildesc
