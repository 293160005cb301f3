#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <string_view>

#include "spinqcorr/quadrature.hpp"

namespace spinqcorr {

/// Anisotropy regimes of the spin-1/2 XXZ chain at zero temperature.
enum class Regime { Ferro, Critical, Isotropic, Gapped };

/// Ferro: delta <= -1; Critical: -1 < delta < 1; Isotropic: |delta - 1| <= 1e-12;
/// Gapped: delta > 1.
Regime regime_of(double delta);
std::string_view regime_name(Regime r);

/// nu = arccosh(delta) on Gapped, phi = arccos(delta)/pi on Critical.
/// The unused field is NaN.
struct AuxiliaryParams {
  double nu = std::nan("");
  double phi = std::nan("");
};
AuxiliaryParams auxiliary_params(double delta);

/// Two-site correlation functions <sigma^z_i sigma^z_{i+r}> and
/// <sigma^x_i sigma^x_{i+r}> at separation r and anisotropy delta.
struct Correlators {
  double zz = 0.0;
  double xx = 0.0;
  int r = 1;
  double delta = 0.0;
  Regime regime = Regime::Critical;
};

/// Exact values at the isotropic point.
inline const double kIsotropicZZ1 = (1.0 - 4.0 * std::log(2.0)) / 3.0;
inline const double kIsotropicZZ2 = 0.242719;

/// Thermodynamic-limit correlators for r in {1, 2}. Regime dispatch:
/// Ferro returns (1, 0) exactly, the isotropic point returns the stored
/// constants, Critical and Gapped are evaluated by quadrature of the
/// corresponding integrals.
///
/// Accuracy degrades within ~1e-8 of delta = 1 (the integral families
/// degenerate there); within 1e-12 the stored constants take over.
Correlators correlators(double delta, int r);
Correlators correlators(double delta, int r, const QuadratureSpec& spec);

/// Thread-safe per-run memo. Keys round delta to 12 decimals.
class CorrelatorCache {
 public:
  Correlators get(double delta, int r);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<long long, int>, Correlators> map_;
};

}  // namespace spinqcorr
