#pragma once

#include <functional>

#include "spinqcorr/states.hpp"

namespace spinqcorr {

/// The four quantum-correlation measures of a two-qubit state. Deficit is
/// in bits; the others are dimensionless.
struct MeasureSet {
  double negativity = 0.0;
  double deficit = 0.0;
  double tdd = 0.0;
  double lqu = 0.0;
};

/// Outcome of the deterministic basis search: coarse 64x64 grid over
/// [0,pi] x [0,2pi), then coordinate-wise golden-section refinement.
struct MinimizerReport {
  double best_value = 0.0;
  MeasurementBasis best_basis;
  long evaluations = 0;
  double grid_stage_value = 0.0;
};

/// Minimizes a smooth objective over measurement bases. Throws
/// MinimizerError (naming the basis) if the objective returns a non-finite
/// value.
MinimizerReport minimize_over_bases(const std::function<double(const MeasurementBasis&)>& objective);

/// Entanglement negativity: sum of |negative eigenvalues| of rho^{T_A}.
double negativity(const HermitianOperator& rho);

/// Information deficit: min_basis S(rho') - S(rho), base-2 logs.
double information_deficit(const HermitianOperator& rho);
double information_deficit(const HermitianOperator& rho, MinimizerReport* report);

/// Trace-distance discord: (1/2) min_basis ||rho - rho'||_1.
double trace_distance_discord(const HermitianOperator& rho);
double trace_distance_discord(const HermitianOperator& rho, MinimizerReport* report);

/// Local quantum uncertainty: 1 - lambda_max of the 3x3 matrix
/// W_uv = Tr[ sqrt(rho) (sigma_u x I) sqrt(rho) (sigma_v x I) ].
double lqu(const HermitianOperator& rho);

/// All four definitional measures of an X state.
MeasureSet definitional_measures(const XState& s);

/// Closed forms for the XXZ X-state family (a = d, b = c, z = xx/2 real).
/// negativity: the PSD-block form max(0, |xx|/2 - (1+zz)/4), which agrees
/// with the regionwise expressions where those are positive.
double negativity_closed_xxz(const Correlators& c);

/// Branch by regime: theta = pi/4 measurement on Critical, theta = 0
/// elsewhere (the two coincide at the isotropic point).
double deficit_closed_xxz(const Correlators& c);

/// |xx| / 2 for every separation.
double tdd_closed_x(const Correlators& c);

/// Branch by regime with an explicit 1/2 normalization of lambda_max so the
/// closed form reproduces the definitional W-matrix computation (the
/// unnormalized branch expressions give lambda_max = 2 on the maximally
/// mixed state).
double lqu_closed_xxz(const Correlators& c);

/// All four closed-form measures from correlators.
MeasureSet closed_measures_xxz(const Correlators& c);

}  // namespace spinqcorr
