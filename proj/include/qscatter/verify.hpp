#pragma once

// Cross-module invariant suite behind `qscatter verify`.

#include <string>
#include <vector>

#include "qscatter/pole_analysis.hpp"

namespace qscatter {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  /// value < tolerance (strict)
  bool passed = false;
};

struct VerifyOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 1.0;
  /// Adds the pole/oracle count-agreement checks for the taxonomy sets at a = 1.
  bool figures = false;
  /// Multiplies every tolerance.
  double tolerance_scale = 1.0;
};

std::vector<CheckResult> run_verify_suite(const VerifyOptions& options);

struct CountComparison {
  std::vector<double> pole_kappas;
  std::vector<double> oracle_kappas;
  /// max |kappa_pole - kappa_oracle| when the counts agree, +inf otherwise
  double max_kappa_gap = 0.0;
  bool counts_match = false;
};

/// Bound states (non-removable zeros on the positive imaginary axis) from the
/// argument-principle search against the shooting oracle, both for
/// kappa in (0, region.im_max).
CountComparison compare_bound_states(const DeltaPairParams& p, const SearchRegion& region);
CountComparison compare_bound_states(const KinkDeltaParams& p, const SearchRegion& region);

}  // namespace qscatter
