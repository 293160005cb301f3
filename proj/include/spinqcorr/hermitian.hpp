#pragma once

#include <array>
#include <complex>
#include <vector>

#include "spinqcorr/errors.hpp"

namespace spinqcorr {

using Complex = std::complex<double>;

/// Dense complex Hermitian matrix of dimension 2 or 4. Construction
/// validates Hermiticity (off-diagonal asymmetry <= 1e-12, diagonal
/// imaginary parts <= 1e-12) and rejects non-finite entries.
class HermitianOperator {
 public:
  static constexpr double kHermTol = 1e-12;

  HermitianOperator(int dim, const std::vector<Complex>& entries);

  static HermitianOperator zero(int dim);
  static HermitianOperator identity(int dim);
  /// Builds without re-validating; callers must guarantee Hermiticity.
  static HermitianOperator from_parts_unchecked(int dim, const std::array<Complex, 16>& a);

  int dim() const { return dim_; }
  Complex operator()(int i, int j) const { return a_[i * dim_ + j]; }
  Complex& at(int i, int j) { return a_[i * dim_ + j]; }

  double trace_real() const;
  /// Largest |a_ij - conj(a_ji)| over all pairs, plus diagonal imag parts.
  double max_asymmetry() const;

 private:
  HermitianOperator() = default;
  int dim_ = 0;
  std::array<Complex, 16> a_{};
};

/// Eigenvalues ascending with an orthonormal eigenvector per column.
struct SpectralDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;        // ascending
  std::array<Complex, 16> eigenvectors{}; // column k = eigenvector of eigenvalues[k]

  Complex vec(int i, int k) const { return eigenvectors[i * dim + k]; }
};

/// Cyclic-Jacobi eigendecomposition. Deterministic sweep order, so results
/// are bit-stable across runs.
SpectralDecomposition eigh(const HermitianOperator& m);

/// Principal square root via the spectral decomposition. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 is rejected.
HermitianOperator matrix_sqrt(const HermitianOperator& m);

/// Schatten one-norm, sum of |eigenvalue|.
double trace_norm(const HermitianOperator& m);

/// Partial transpose over the first qubit of a two-qubit operator:
/// out(2i+j, 2k+l) = in(2k+j, 2i+l).
HermitianOperator partial_transpose_A(const HermitianOperator& m);

/// Von Neumann entropy in bits. Requires unit trace (1e-10) and spectrum
/// >= -1e-10; eigenvalues below 1e-14 are treated as exact zeros.
double von_neumann_entropy(const HermitianOperator& m);

namespace detail {

/// In-place cyclic Jacobi for an n x n complex Hermitian matrix stored
/// row-major in `a` with leading dimension n (n <= 4). Eigenvectors are
/// accumulated into `v` (also n x n row-major), eigenvalues returned
/// ascending with matching column order.
void jacobi_hermitian(Complex* a, Complex* v, double* w, int n);

/// Largest eigenvalue of a real symmetric 3x3 matrix (row-major).
double max_eigenvalue_sym3(const std::array<double, 9>& m);

}  // namespace detail

}  // namespace spinqcorr
