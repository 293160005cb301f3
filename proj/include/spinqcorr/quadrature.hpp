#pragma once

#include <complex>
#include <functional>

#include "spinqcorr/errors.hpp"

namespace spinqcorr {

/// Tolerances and cutoffs for the adaptive integrator. The default tail
/// cutoff suits integrands decaying like exp(-pi|t|); integrands with a
/// slower rate (the real-line family near its parameter edges) must pass a
/// larger cutoff chosen from their decay constant.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double tail_cutoff = 40.0;        // T: integrate |x| <= T
  double singularity_window = 1e-4; // eps: linear patch on [0, eps)
  long max_evaluations = 1000000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// One integrand evaluation. Non-finite values are rejected at the sample
/// that produced them, so a blown-up integrand fails loudly with its
/// location instead of poisoning the sum.
struct IntegrandSample {
  std::complex<double> point;
  std::complex<double> value;

  bool finite() const {
    return std::isfinite(value.real()) && std::isfinite(value.imag());
  }
};

/// Adaptive Gauss-Kronrod 7/15 over [a, b]. Deterministic bisection order;
/// throws ConvergenceError when the evaluation budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec);

/// Complex-valued counterpart used by the shifted-contour integral.
std::complex<double> integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                                                double a, double b, const QuadratureSpec& spec,
                                                double* error_estimate = nullptr);

/// 2 * integral_0^inf of an even integrand with a removable singularity at
/// x = 0. The caller supplies the analytic x->0 limit; inside [0, eps) the
/// integrand is replaced by the linear interpolation between that limit and
/// f(eps).
double integrate_even_realline(const std::function<double(double)>& f, double limit0,
                               const QuadratureSpec& spec);

/// Integral along Im x = 1/2: parameterizes x = t + i/2 for t in [-T, T],
/// returns the real part and rejects |imaginary part| > 1e-8 (the physical
/// integrands are conjugate-symmetric under t -> -t, so a residual imaginary
/// part means the integrand was transcribed wrong).
double integrate_shifted_contour(const std::function<std::complex<double>(std::complex<double>)>& g,
                                 const QuadratureSpec& spec);

}  // namespace spinqcorr
