#pragma once

// JSON input files: base field, extension, system and options, with every
// formula written as an expression string.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weildesc/points.hpp"

namespace weildesc {

struct InputOptions {
  std::uint32_t prolong = 0;
  bool geometric = false;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
};

struct InputSpec {
  BaseField base;
  std::optional<Extension> ext;
  std::vector<std::string> vars;
  std::vector<std::string> equation_sources;
  std::vector<DPolyB> equations;
  InputOptions options;

  const Extension& extension() const { return *ext; }
};

enum class TableValidation {
  Strict,   // table extensions go through ext_from_table
  Deferred  // accepted as given; validate_extension reports later
};

/// Throws InvalidInput for malformed JSON or schema violations, the parser's
/// errors for bad formulas, and NonCommutingDerivations.
InputSpec parse_input(std::string_view json_text, TableValidation validation = TableValidation::Strict);
InputSpec load_input(const std::string& path, TableValidation validation = TableValidation::Strict);

/// Point file: a JSON object from system variable to an expression in B.
BPoint parse_point(std::string_view json_text, const Extension& e, const std::vector<std::string>& vars);
BPoint load_point(const std::string& path, const Extension& e, const std::vector<std::string>& vars);

std::string read_file(const std::string& path);

}  // namespace weildesc
