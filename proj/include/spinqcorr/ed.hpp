#pragma once

#include "spinqcorr/xxz.hpp"

namespace spinqcorr {

/// Finite-ring exact-diagonalization result. `correlators` holds the
/// translation-averaged two-site functions in the global ground state.
/// When the ground level is (nearly) degenerate the next-level values are
/// reported as well and `degenerate` is set.
struct EdResult {
  Correlators correlators;
  double energy = 0.0;
  /// Gap to the next distinct level resolved by the Krylov iteration (or to
  /// the competing fully-polarized state, whichever is smaller).
  double gap = 0.0;
  bool degenerate = false;
  bool has_second = false;
  double zz_second = 0.0;
  double xx_second = 0.0;
};

/// Ground state of the periodic XXZ ring of N sites (N even, 8..16) via a
/// Lanczos iteration restricted to the Sz_total = 0 sector, compared against
/// the fully polarized product state which wins for delta < -1.
EdResult ed_correlators(int n_sites, double delta, int r);

}  // namespace spinqcorr
