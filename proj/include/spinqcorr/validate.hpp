#pragma once

#include <string>
#include <vector>

#include "spinqcorr/ed.hpp"
#include "spinqcorr/lmg.hpp"
#include "spinqcorr/measures.hpp"

namespace spinqcorr {

/// Outcome of one validation suite: human-readable lines, findings that are
/// surfaced without failing the suite, and the worst residual seen.
struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  std::vector<std::string> lines;
  std::vector<std::string> findings;
};

/// Thermodynamic-limit estimate from ground-state data at N = 12, 14, 16.
/// Chooses between an exact quadratic in 1/N and Aitken's delta-squared by
/// the measured ratio of successive differences: ratios in [0.70, 0.995]
/// indicate a slow geometric correction (Aitken), ratios outside (0.5,
/// 0.995] indicate power-law or non-monotone corrections (quadratic), and
/// the band in between (where 1/N^2 and fast-geometric signatures overlap)
/// takes the average of the two estimates.
double extrapolate_to_thermo(double f12, double f14, double f16);

/// Generic fallback for user-chosen size lists (pairs of N, value).
double extrapolate_sizes(const std::vector<std::pair<int, double>>& data);

/// Closed-form vs definitional measures on the 16-point (delta, r) grid;
/// passes when every residual is <= 1e-7.
SuiteResult validate_closed_forms();

/// Integral correlators vs extrapolated ED on the 8-point grid; passes at
/// 5e-3 (r=1) and 1e-2 (r=2). `sizes` defaults to {12, 14, 16}.
SuiteResult validate_ed(std::vector<int> sizes = {});

/// LMG closed forms vs the definitional pipeline on lambda = 0..0.9 plus
/// the polarized points {1, 1.5, 2}; reports the dual-LQU mismatch as a
/// FINDING rather than a failure.
SuiteResult validate_lmg();

}  // namespace spinqcorr
