#pragma once

#include "spinqcorr/measures.hpp"

namespace spinqcorr {

/// Closed-form measures of the LMG pair state (same-mode). `core.lqu` is
/// the value consistent with the definitional W-matrix computation
/// (1 - lambda^2 for lambda < 1); `lqu_paper` keeps the published branch
/// value 1 - lambda alongside, since the two disagree (see lmg_validate).
struct LmgMeasures {
  MeasureSet core;
  double lqu_paper = 0.0;
};

LmgMeasures lmg_closed_measures(double lambda);

/// One cross-validated LMG point: closed forms next to the full
/// definitional pipeline on the same pair state.
struct LmgPoint {
  double lambda = 0.0;
  double alpha = 0.0;  // variational angle, cos(2 alpha) = min(lambda, 1)
  MeasureSet closed;
  MeasureSet definitional;
  double lqu_paper = 0.0;
  /// max |closed - definitional| over negativity, deficit, tdd
  double max_residual = 0.0;
  double lqu_residual_def = 0.0;    // |definitional - (1 - lambda^2)|
  double lqu_residual_paper = 0.0;  // |definitional - (1 - lambda)|
};

/// Runs the same-mode pair state through all four definitional measures and
/// asserts closed-vs-definitional agreement (<= 1e-8) for negativity,
/// deficit and tdd. The two LQU values are recorded without asserting
/// equality; their mismatch is a finding the validation reports surface.
LmgPoint lmg_validate(double lambda);

}  // namespace spinqcorr
