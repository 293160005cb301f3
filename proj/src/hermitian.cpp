#include "spinqcorr/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace spinqcorr {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

HermitianOperator::HermitianOperator(int dim, const std::vector<Complex>& entries) {
  if (dim != 2 && dim != 4) throw DimensionError("HermitianOperator: dim must be 2 or 4");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw DimensionError("HermitianOperator: entry count does not match dim");
  dim_ = dim;
  for (int i = 0; i < dim * dim; ++i) {
    if (!finite(entries[i])) throw InvalidStateError("HermitianOperator: non-finite entry");
    a_[i] = entries[i];
  }
  double asym = max_asymmetry();
  if (asym > kHermTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "HermitianOperator: max asymmetry %.3e exceeds %.1e", asym,
                  kHermTol);
    throw NonHermitianError(buf, asym);
  }
  // Symmetrize so downstream algebra sees an exactly Hermitian matrix.
  for (int i = 0; i < dim; ++i) {
    a_[i * dim + i] = Complex(a_[i * dim + i].real(), 0.0);
    for (int j = i + 1; j < dim; ++j) {
      Complex m = 0.5 * (a_[i * dim + j] + std::conj(a_[j * dim + i]));
      a_[i * dim + j] = m;
      a_[j * dim + i] = std::conj(m);
    }
  }
}

HermitianOperator HermitianOperator::zero(int dim) {
  if (dim != 2 && dim != 4) throw DimensionError("HermitianOperator: dim must be 2 or 4");
  HermitianOperator h;
  h.dim_ = dim;
  return h;
}

HermitianOperator HermitianOperator::identity(int dim) {
  HermitianOperator h = zero(dim);
  for (int i = 0; i < dim; ++i) h.a_[i * dim + i] = 1.0;
  return h;
}

HermitianOperator HermitianOperator::from_parts_unchecked(int dim,
                                                          const std::array<Complex, 16>& a) {
  HermitianOperator h;
  h.dim_ = dim;
  h.a_ = a;
  return h;
}

double HermitianOperator::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
  return t;
}

double HermitianOperator::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) {
    m = std::max(m, std::abs(a_[i * dim_ + i].imag()));
    for (int j = i + 1; j < dim_; ++j)
      m = std::max(m, std::abs(a_[i * dim_ + j] - std::conj(a_[j * dim_ + i])));
  }
  return m;
}

namespace detail {

void jacobi_hermitian(Complex* a, Complex* v, double* w, int n) {
  // Eigenvector accumulator starts as identity.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i * n + j] = (i == j) ? 1.0 : 0.0;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
    if (off < 1e-60) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Complex apq = a[p * n + q];
        double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        Complex sigma = apq / mag;  // phase of the pivot
        double app = a[p * n + p].real();
        double aqq = a[q * n + q].real();
        double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;

        // Unitary J: J[p][p]=c, J[p][q]=s*sigma, J[q][p]=-s*conj(sigma), J[q][q]=c.
        // Update A <- J^dagger A J.
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          Complex akp = a[k * n + p];
          Complex akq = a[k * n + q];
          a[k * n + p] = c * akp - s * std::conj(sigma) * akq;
          a[k * n + q] = s * sigma * akp + c * akq;
          a[p * n + k] = std::conj(a[k * n + p]);
          a[q * n + k] = std::conj(a[k * n + q]);
        }
        double app_new = c * c * app - 2.0 * s * c * mag + s * s * aqq;
        double aqq_new = s * s * app + 2.0 * s * c * mag + c * c * aqq;
        a[p * n + p] = app_new;
        a[q * n + q] = aqq_new;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        for (int k = 0; k < n; ++k) {
          Complex vkp = v[k * n + p];
          Complex vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * std::conj(sigma) * vkq;
          v[k * n + q] = s * sigma * vkp + c * vkq;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) w[i] = a[i * n + i].real();

  // Ascending order with matching eigenvector columns.
  std::array<int, 4> idx{};
  std::iota(idx.begin(), idx.begin() + n, 0);
  std::stable_sort(idx.begin(), idx.begin() + n, [&](int x, int y) { return w[x] < w[y]; });
  std::array<double, 4> ws{};
  std::array<Complex, 16> vs{};
  for (int k = 0; k < n; ++k) {
    ws[k] = w[idx[k]];
    for (int i = 0; i < n; ++i) vs[i * n + k] = v[i * n + idx[k]];
  }
  // Fix the free phase per column: largest-magnitude component real positive.
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double m = std::abs(vs[i * n + k]);
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    Complex ph = vs[imax * n + k];
    if (std::abs(ph) > 0) {
      ph /= std::abs(ph);
      for (int i = 0; i < n; ++i) vs[i * n + k] /= ph;
    }
  }
  for (int k = 0; k < n; ++k) w[k] = ws[k];
  for (int i = 0; i < n * n; ++i) v[i] = vs[i];
}

double max_eigenvalue_sym3(const std::array<double, 9>& m) {
  std::array<Complex, 16> a{};
  std::array<Complex, 16> v{};
  std::array<double, 4> w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i * 3 + j] = m[i * 3 + j];
  jacobi_hermitian(a.data(), v.data(), w.data(), 3);
  return w[2];
}

}  // namespace detail

SpectralDecomposition eigh(const HermitianOperator& m) {
  // Hermiticity is enforced at construction; re-check cheaply in case the
  // caller built the operator through the unchecked path.
  double asym = m.max_asymmetry();
  if (asym > HermitianOperator::kHermTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "eigh: max asymmetry %.3e exceeds %.1e", asym,
                  HermitianOperator::kHermTol);
    throw NonHermitianError(buf, asym);
  }
  int n = m.dim();
  std::array<Complex, 16> a{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  SpectralDecomposition d;
  d.dim = n;
  d.eigenvalues.resize(n);
  std::array<double, 4> w{};
  detail::jacobi_hermitian(a.data(), d.eigenvectors.data(), w.data(), n);
  for (int i = 0; i < n; ++i) d.eigenvalues[i] = w[i];
  return d;
}

HermitianOperator matrix_sqrt(const HermitianOperator& m) {
  SpectralDecomposition d = eigh(m);
  int n = m.dim();
  for (double& lam : d.eigenvalues) {
    if (lam < -1e-10) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "matrix_sqrt: eigenvalue %.3e below -1e-10", lam);
      throw InvalidStateError(buf);
    }
    if (lam < 0.0) lam = 0.0;
  }
  std::array<Complex, 16> out{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        s += d.vec(i, k) * std::sqrt(d.eigenvalues[k]) * std::conj(d.vec(j, k));
      out[i * n + j] = s;
    }
  // Exact Hermitian symmetrization of the reconstruction.
  for (int i = 0; i < n; ++i) {
    out[i * n + i] = Complex(out[i * n + i].real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      Complex avg = 0.5 * (out[i * n + j] + std::conj(out[j * n + i]));
      out[i * n + j] = avg;
      out[j * n + i] = std::conj(avg);
    }
  }
  return HermitianOperator::from_parts_unchecked(n, out);
}

double trace_norm(const HermitianOperator& m) {
  SpectralDecomposition d = eigh(m);
  double s = 0.0;
  for (double lam : d.eigenvalues) s += std::abs(lam);
  return s;
}

HermitianOperator partial_transpose_A(const HermitianOperator& m) {
  if (m.dim() != 4) throw DimensionError("partial_transpose_A: requires dim 4");
  std::array<Complex, 16> out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[(2 * i + j) * 4 + (2 * k + l)] = m(2 * k + j, 2 * i + l);
  return HermitianOperator::from_parts_unchecked(4, out);
}

double von_neumann_entropy(const HermitianOperator& m) {
  double tr = m.trace_real();
  if (std::abs(tr - 1.0) > 1e-10) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "von_neumann_entropy: trace %.12f is not 1", tr);
    throw InvalidStateError(buf);
  }
  SpectralDecomposition d = eigh(m);
  double s = 0.0;
  for (double lam : d.eigenvalues) {
    if (lam < -1e-10) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "von_neumann_entropy: eigenvalue %.3e below -1e-10", lam);
      throw InvalidStateError(buf);
    }
    if (lam <= 1e-14) continue;  // 0 log 0 = 0
    s -= lam * std::log2(lam);
  }
  return s;
}

}  // namespace spinqcorr
