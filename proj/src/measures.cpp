#include "spinqcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spinqcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double checked_eval(const std::function<double(const MeasurementBasis&)>& f,
                    const MeasurementBasis& b, long& evals) {
  double v = f(b);
  ++evals;
  if (!std::isfinite(v)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "minimizer: objective non-finite at theta=%.9f phi=%.9f",
                  b.theta, b.phi);
    throw MinimizerError(buf);
  }
  return v;
}

// Golden-section search for the minimum of g on [lo, hi]; returns the best
// point, updates incumbent if improved.
template <typename G>
double golden_min(const G& g, double lo, double hi, double stop_width, double& best_val,
                  double best_point) {
  const double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  while (hi - lo > stop_width) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g(x2);
    }
  }
  double xm = 0.5 * (lo + hi);
  double fm = g(xm);
  double xbest = xm, fbest = fm;
  if (f1 < fbest) {
    xbest = x1;
    fbest = f1;
  }
  if (f2 < fbest) {
    xbest = x2;
    fbest = f2;
  }
  if (fbest < best_val) {
    best_val = fbest;
    return xbest;
  }
  return best_point;
}

// x log2(x) with the 0 log 0 = 0 convention; negative arguments beyond
// roundoff are a state-validity bug upstream.
double xlog2x(double x) {
  if (x <= 1e-14) {
    if (x < -1e-12) throw InvalidCorrelatorError("xlog2x: negative argument");
    return 0.0;
  }
  return x * std::log2(x);
}

double sqrt_clamped(double x) {
  if (x < 0.0) {
    if (x < -1e-12) throw InvalidCorrelatorError("lqu closed form: negative radicand");
    return 0.0;
  }
  return std::sqrt(x);
}

}  // namespace

MinimizerReport minimize_over_bases(
    const std::function<double(const MeasurementBasis&)>& objective) {
  MinimizerReport rep;
  long evals = 0;

  // Stage 1: fixed 64x64 grid. Theta spans the closed interval so the
  // computational-basis measurement is sampled exactly.
  const int n = 64;
  double best = 1e300;
  MeasurementBasis best_b;
  for (int i = 0; i < n; ++i) {
    double theta = kPi * static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      double phi = kTwoPi * static_cast<double>(j) / n;
      MeasurementBasis b{theta, phi};
      double v = checked_eval(objective, b, evals);
      if (v < best) {
        best = v;
        best_b = b;
      }
    }
  }
  rep.grid_stage_value = best;

  // Stage 2: coordinate-wise golden-section refinement to width 1e-8,
  // repeated until the basis stops moving. Both angles are periodic on the
  // projector manifold (theta with period pi through the pole, phi with
  // period 2 pi), so the brackets are left unclamped and samples are wrapped
  // into range; clamping at the box edges would trap optima that sit just
  // across them. Brackets track the observed movement so shallow diagonal
  // valleys keep making progress.
  auto wrap = [](double x, double period) {
    double w = std::fmod(x, period);
    return w < 0.0 ? w + period : w;
  };
  const double cell_theta = kPi / (n - 1);
  const double cell_phi = kTwoPi / n;
  double h_theta = cell_theta;
  double h_phi = cell_phi;
  for (int pass = 0; pass < 300; ++pass) {
    MeasurementBasis prev = best_b;
    auto g_theta = [&](double t) {
      MeasurementBasis b{wrap(t, kPi), best_b.phi};
      return checked_eval(objective, b, evals);
    };
    double new_theta = golden_min(g_theta, best_b.theta - h_theta, best_b.theta + h_theta, 1e-8,
                                  best, best_b.theta);
    double moved = std::abs(new_theta - prev.theta);
    best_b.theta = wrap(new_theta, kPi);

    auto g_phi = [&](double p) {
      MeasurementBasis b{best_b.theta, wrap(p, kTwoPi)};
      return checked_eval(objective, b, evals);
    };
    double new_phi =
        golden_min(g_phi, best_b.phi - h_phi, best_b.phi + h_phi, 1e-8, best, best_b.phi);
    moved += std::abs(new_phi - prev.phi);
    best_b.phi = wrap(new_phi, kTwoPi);

    if (pass > 0 && moved < 1e-9) break;
    h_theta = std::clamp(4.0 * moved, 1e-8, cell_theta);
    h_phi = std::clamp(4.0 * moved, 1e-8, cell_phi);
  }

  rep.best_value = best;
  rep.best_basis = best_b;
  rep.evaluations = evals;
  return rep;
}

double negativity(const HermitianOperator& rho) {
  SpectralDecomposition d = eigh(partial_transpose_A(rho));
  double s = 0.0;
  for (double lam : d.eigenvalues)
    if (lam < 0.0) s += -lam;
  return s;
}

double information_deficit(const HermitianOperator& rho, MinimizerReport* report) {
  double s0 = von_neumann_entropy(rho);
  auto objective = [&rho](const MeasurementBasis& b) {
    return von_neumann_entropy(project_measure_A(rho, b));
  };
  MinimizerReport rep = minimize_over_bases(objective);
  if (report) *report = rep;
  return std::max(0.0, rep.best_value - s0);
}

double information_deficit(const HermitianOperator& rho) { return information_deficit(rho, nullptr); }

double trace_distance_discord(const HermitianOperator& rho, MinimizerReport* report) {
  auto objective = [&rho](const MeasurementBasis& b) {
    HermitianOperator rp = project_measure_A(rho, b);
    std::array<Complex, 16> diff{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) diff[i * 4 + j] = rho(i, j) - rp(i, j);
    return 0.5 * trace_norm(HermitianOperator::from_parts_unchecked(4, diff));
  };
  MinimizerReport rep = minimize_over_bases(objective);
  if (report) *report = rep;
  return rep.best_value;
}

double trace_distance_discord(const HermitianOperator& rho) {
  return trace_distance_discord(rho, nullptr);
}

double lqu(const HermitianOperator& rho) {
  if (rho.dim() != 4) throw DimensionError("lqu: state must be 4x4");
  HermitianOperator s = matrix_sqrt(rho);

  // Pauli x, y, z acting on qubit A.
  auto pauli_a = [](int u) {
    std::array<Complex, 16> m{};
    auto set = [&m](int i, int j, Complex v) { m[i * 4 + j] = v; };
    switch (u) {
      case 0:  // sigma_x x I
        set(0, 2, 1.0), set(1, 3, 1.0), set(2, 0, 1.0), set(3, 1, 1.0);
        break;
      case 1:  // sigma_y x I
        set(0, 2, Complex(0, -1)), set(1, 3, Complex(0, -1));
        set(2, 0, Complex(0, 1)), set(3, 1, Complex(0, 1));
        break;
      default:  // sigma_z x I
        set(0, 0, 1.0), set(1, 1, 1.0), set(2, 2, -1.0), set(3, 3, -1.0);
    }
    return m;
  };

  auto mul = [](const std::array<Complex, 16>& x, const std::array<Complex, 16>& y) {
    std::array<Complex, 16> r{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        Complex xik = x[i * 4 + k];
        if (xik == Complex(0.0, 0.0)) continue;
        for (int j = 0; j < 4; ++j) r[i * 4 + j] += xik * y[k * 4 + j];
      }
    return r;
  };

  std::array<Complex, 16> sq{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sq[i * 4 + j] = s(i, j);

  std::array<std::array<Complex, 16>, 3> s_sig;
  for (int u = 0; u < 3; ++u) s_sig[u] = mul(sq, pauli_a(u));

  // W_uv = Tr[ (sqrt(rho) sigma_u) (sqrt(rho) sigma_v) ]; Hermitian, and real
  // symmetric for the states handled here.
  std::array<double, 9> w{};
  for (int u = 0; u < 3; ++u)
    for (int v = u; v < 3; ++v) {
      Complex tr = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) tr += s_sig[u][i * 4 + k] * s_sig[v][k * 4 + i];
      double re = tr.real();
      w[u * 3 + v] = re;
      w[v * 3 + u] = re;
    }

  double lam_max = detail::max_eigenvalue_sym3(w);
  return std::clamp(1.0 - lam_max, 0.0, 1.0);
}

MeasureSet definitional_measures(const XState& s) {
  HermitianOperator rho = s.to_operator();
  MeasureSet m;
  m.negativity = negativity(rho);
  m.deficit = information_deficit(rho);
  m.tdd = trace_distance_discord(rho);
  m.lqu = lqu(rho);
  return m;
}

double negativity_closed_xxz(const Correlators& c) {
  return std::max(0.0, std::abs(c.xx) / 2.0 - (1.0 + c.zz) / 4.0);
}

double deficit_closed_xxz(const Correlators& c) {
  const double zz = c.zz, xx = c.xx;
  if (c.regime == Regime::Critical) {
    // Optimal measurement at theta = pi/4, phi = 0.
    return 0.25 * (2.0 * xlog2x(1.0 + zz) -
                   (2.0 * xlog2x(1.0 + xx) - xlog2x(1.0 - zz + 2.0 * xx)) -
                   (2.0 * xlog2x(1.0 - xx) - xlog2x(1.0 - zz - 2.0 * xx)));
  }
  // Optimal measurement at theta = 0, phi = 0.
  return 0.25 * (xlog2x(1.0 - zz + 2.0 * xx) + xlog2x(1.0 - zz - 2.0 * xx) -
                 2.0 * xlog2x(1.0 - zz));
}

double tdd_closed_x(const Correlators& c) { return std::abs(c.xx) / 2.0; }

double lqu_closed_xxz(const Correlators& c) {
  const double zz = c.zz, xx = c.xx;
  double lam_max;
  if (c.regime == Regime::Critical) {
    lam_max = 0.5 * sqrt_clamped(1.0 + zz) *
              (sqrt_clamped(1.0 - zz + 2.0 * xx) + sqrt_clamped(1.0 - zz - 2.0 * xx));
  } else {
    double rad = (1.0 - zz) * (1.0 - zz) - 4.0 * xx * xx;
    lam_max = 0.5 * (1.0 + zz + sqrt_clamped(rad));
  }
  return std::clamp(1.0 - lam_max, 0.0, 1.0);
}

MeasureSet closed_measures_xxz(const Correlators& c) {
  MeasureSet m;
  m.negativity = negativity_closed_xxz(c);
  m.deficit = deficit_closed_xxz(c);
  m.tdd = tdd_closed_x(c);
  m.lqu = lqu_closed_xxz(c);
  return m;
}

}  // namespace spinqcorr
