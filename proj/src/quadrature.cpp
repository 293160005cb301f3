#include "spinqcorr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace spinqcorr {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (positive half; node 7 is x = 0).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// 7-point Gauss weights, matching the odd Kronrod nodes 1,3,5,7.
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

template <typename T, typename F>
T checked_sample(const F& f, double x) {
  T v = f(x);
  IntegrandSample s{x, v};
  if (!s.finite()) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "quadrature: integrand non-finite at x = %.12g", x);
    throw Error(buf);
  }
  return v;
}

template <typename T, typename F>
void gk15(const F& f, double a, double b, T& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T resk{};
  T resg{};
  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      T fc = checked_sample<T>(f, c);
      resk += kWgk[7] * fc;
      resg += kWg[3] * fc;
      break;
    }
    T f1 = checked_sample<T>(f, c - h * kXgk[j]);
    T f2 = checked_sample<T>(f, c + h * kXgk[j]);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  value = resk * h;
  err = std::abs((resk - resg) * h);
}

template <typename T>
struct Accum {
  T value{};
  double err = 0.0;
};

template <typename T, typename F>
void adapt(const F& f, double a, double b, double tol, int depth, long& evals, long budget,
           Accum<T>& acc) {
  if (evals + 15 > budget) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "quadrature: evaluation budget %ld exhausted (error bound %.3e)", budget,
                  acc.err);
    throw ConvergenceError(buf, std::abs(acc.value), acc.err);
  }
  T v{};
  double e = 0.0;
  gk15(f, a, b, v, e);
  evals += 15;
  if (e <= tol || depth >= 48 || (b - a) < 1e-14 * (1.0 + std::abs(a) + std::abs(b))) {
    acc.value += v;
    acc.err += e;
    return;
  }
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, evals, budget, acc);
  adapt(f, mid, b, 0.5 * tol, depth + 1, evals, budget, acc);
}

// Panel edges that grow geometrically away from zero. Keeps the first-pass
// Kronrod estimate meaningful on long decaying domains.
std::vector<double> panel_edges(double a, double b) {
  std::vector<double> edges;
  edges.push_back(a);
  if (a < 0.0 && b > 0.0) edges.push_back(0.0);
  auto grow = [&edges, b](double from) {
    double w = 1.0;
    double x = from;
    while (x + w < b) {
      x += w;
      edges.push_back(x);
      w *= 2.0;
    }
  };
  if (a >= 0.0) {
    grow(a);
  } else if (b <= 0.0) {
    // Mirror: build from b backwards.
    std::vector<double> rev;
    double w = 1.0;
    double x = b;
    while (x - w > a) {
      x -= w;
      rev.push_back(x);
      w *= 2.0;
    }
    edges.insert(edges.end(), rev.rbegin(), rev.rend());
  } else {
    // Straddles zero: grow on both sides.
    std::vector<double> rev;
    double w = 1.0;
    double x = 0.0;
    while (x - w > a) {
      x -= w;
      rev.push_back(x);
      w *= 2.0;
    }
    // Insert the negative-side edges between a and 0.
    edges.insert(edges.begin() + 1, rev.rbegin(), rev.rend());
    grow(0.0);
  }
  edges.push_back(b);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

template <typename T, typename F>
T integrate_panels(const F& f, double a, double b, const QuadratureSpec& spec, double* err_out,
                   long* evals_out) {
  std::vector<double> edges = panel_edges(a, b);
  long evals = 0;

  // First pass: single Kronrod per panel to scale the relative tolerance.
  T whole{};
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    T v{};
    double e = 0.0;
    gk15(f, edges[i], edges[i + 1], v, e);
    evals += 15;
    whole += v;
  }
  double tol_total = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole));
  double tol_panel = tol_total / static_cast<double>(edges.size() - 1);

  Accum<T> acc;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    adapt(f, edges[i], edges[i + 1], tol_panel, 0, evals, spec.max_evaluations, acc);
  if (err_out) *err_out = acc.err;
  if (evals_out) *evals_out = evals;
  return acc.value;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("QuadratureSpec: tolerances must be positive");
  if (!(tail_cutoff > 1.0)) throw DomainError("QuadratureSpec: tail_cutoff must exceed 1");
  if (!(singularity_window > 0.0) || !(singularity_window < 0.1))
    throw DomainError("QuadratureSpec: singularity_window must lie in (0, 0.1)");
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec) {
  spec.validate();
  QuadratureResult r;
  r.value = integrate_panels<double>(f, a, b, spec, &r.error_estimate, &r.evaluations);
  return r;
}

std::complex<double> integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, double* error_estimate) {
  spec.validate();
  return integrate_panels<std::complex<double>>(f, a, b, spec, error_estimate, nullptr);
}

double integrate_even_realline(const std::function<double(double)>& f, double limit0,
                               const QuadratureSpec& spec) {
  spec.validate();
  const double eps = spec.singularity_window;
  const double T = spec.tail_cutoff;
  // Linear model across the removable singularity.
  double patch = 0.5 * eps * (limit0 + f(eps));
  QuadratureResult body = integrate_adaptive(f, eps, T, spec);
  return 2.0 * (patch + body.value);
}

double integrate_shifted_contour(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    const QuadratureSpec& spec) {
  spec.validate();
  const double T = spec.tail_cutoff;
  auto f = [&g](double t) { return g(std::complex<double>(t, 0.5)); };
  std::complex<double> val = integrate_adaptive_complex(f, -T, T, spec);
  if (std::abs(val.imag()) > 1e-8) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "shifted-contour integral has imaginary part %.3e (integrand transcription?)",
                  val.imag());
    throw ContourIntegrityError(buf, val.imag());
  }
  return val.real();
}

}  // namespace spinqcorr
