#pragma once

// B-valued points versus A-valued points of the descended system.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weildesc/descent.hpp"

namespace weildesc {

using BPoint = std::map<std::string, ExtElem>;
/// (variable name, 1-based component) -> coordinate.
using APoint = std::map<std::pair<std::string, std::size_t>, BaseElem>;

APoint split_point(const BPoint& p, const Extension& e);
BPoint join_point(const APoint& p, const Extension& e);

struct CorrespondenceEntry {
  ExtElem value;                     // eval_B(f, p)
  std::vector<BaseElem> components;  // eval_A(g_i, split(p))
  bool identity_holds = false;
  bool vanishes_over_B = false;
  bool vanishes_over_A = false;
};

struct CorrespondenceReport {
  std::vector<CorrespondenceEntry> entries;
  bool ok() const;
};

/// Order-0 systems only (InvalidInput otherwise); UnassignedVariable if p
/// misses a variable.
CorrespondenceReport check_correspondence(const std::vector<DPolyB>& fs, const BPoint& p, const Extension& e);

struct DifferentialPointReport {
  std::vector<ExtElem> original;    // each equation at p, derivatives via ext_delta
  std::vector<BaseElem> residuals;  // each geometric equation at y_{x,i} = lambda_i(p(x))
  bool original_vanishes = false;
  bool descended_vanishes = false;
  /// residual of (equation q, component i) equals lambda_i of original q.
  bool coordinates_agree = false;

  bool verdicts_agree() const { return original_vanishes == descended_vanishes; }
  bool ok() const { return verdicts_agree() && coordinates_agree; }
};

/// geometric must be to_geometric_form(descend_system(fs, e, ...), e), i.e.
/// l entries per equation in (equation, component) order.
DifferentialPointReport check_differential_point(const std::vector<DPolyB>& fs, const std::vector<GeoPoly>& geometric,
                                                 const BPoint& p, const Extension& e);

}  // namespace weildesc
