#pragma once

#include "spinqcorr/hermitian.hpp"
#include "spinqcorr/xxz.hpp"

namespace spinqcorr {

/// Two-qubit X-form density matrix in the basis |00>, |01>, |10>, |11>:
/// diagonal (a, b, c, d), inner coherence z at (1,2), outer coherence w at
/// (0,3). All states in this artifact have w = 0; the field exists so the
/// closed-form measures can assert that rather than assume it.
struct XState {
  double a = 0.25, b = 0.25, c = 0.25, d = 0.25;
  Complex z{0.0, 0.0};
  Complex w{0.0, 0.0};

  /// Validates trace 1, nonnegative diagonal and the X-form PSD conditions
  /// |z| <= sqrt(bc), |w| <= sqrt(ad) (with 1e-10 slack).
  void validate() const;
  HermitianOperator to_operator() const;
};

/// Projective measurement direction on qubit A:
///   |O0> = cos(theta)|0> + e^{i phi} sin(theta)|1>
///   |O1> = -e^{-i phi} sin(theta)|0> + cos(theta)|1>
struct MeasurementBasis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  void validate() const;
  /// Projector |O_j><O_j| (2x2), j in {0, 1}.
  HermitianOperator projector(int j) const;
};

/// X state of the XXZ two-site reduced density matrix:
/// a = d = (1+zz)/4, b = c = (1-zz)/4, z = xx/2, w = 0.
XState xxz_state(const Correlators& c);

/// Pair state of the LMG Hartree-Fock ground state. With cos(2 alpha) =
/// min(lambda, 1): same_mode gives the pure state cos(a)|01> + sin(a)|10>;
/// different modes give the diagonal (and hence uncorrelated) state.
XState lmg_pair_state(double lambda, bool same_mode);

/// Local projective measurement channel on qubit A:
/// rho' = sum_j (P_j x I) rho (P_j x I).
HermitianOperator project_measure_A(const HermitianOperator& rho, const MeasurementBasis& basis);
HermitianOperator project_measure_A(const XState& rho, const MeasurementBasis& basis);

}  // namespace spinqcorr
