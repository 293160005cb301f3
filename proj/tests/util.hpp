#pragma once

#include <random>

#include "spinqcorr/hermitian.hpp"

namespace testutil {

using spinqcorr::Complex;
using spinqcorr::HermitianOperator;

inline HermitianOperator random_hermitian(std::mt19937& rng, int dim, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<Complex> m(dim * dim);
  for (int i = 0; i < dim; ++i) {
    m[i * dim + i] = g(rng);
    for (int j = i + 1; j < dim; ++j) {
      Complex v(g(rng), g(rng));
      m[i * dim + j] = v;
      m[j * dim + i] = std::conj(v);
    }
  }
  return HermitianOperator(dim, m);
}

// rho = A A^dagger / Tr, full rank almost surely.
inline HermitianOperator random_density(std::mt19937& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> a(dim * dim);
  for (auto& v : a) v = Complex(g(rng), g(rng));
  std::vector<Complex> m(dim * dim, Complex(0, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Complex s = 0;
      for (int k = 0; k < dim; ++k) s += a[i * dim + k] * std::conj(a[j * dim + k]);
      m[i * dim + j] = s;
    }
  double tr = 0;
  for (int i = 0; i < dim; ++i) tr += m[i * dim + i].real();
  for (auto& v : m) v /= tr;
  return HermitianOperator(dim, m);
}

// Haar 2x2 unitary (global phase dropped):
// [[ e^{ia} c, e^{ib} s ], [ -e^{-ib} s, e^{-ia} c ]].
inline std::array<Complex, 4> random_unitary2(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double th = std::asin(std::sqrt(u(rng)));
  double a = 2.0 * M_PI * u(rng), b = 2.0 * M_PI * u(rng);
  double c = std::cos(th), s = std::sin(th);
  return {std::polar(c, a), std::polar(s, b), -std::polar(s, -b), std::polar(c, -a)};
}

// U_A x U_B conjugation of a 4x4 operator.
inline HermitianOperator conjugate_local(const HermitianOperator& rho,
                                         const std::array<Complex, 4>& ua,
                                         const std::array<Complex, 4>& ub) {
  auto u = [&](int i, int j) {
    return ua[(i >> 1) * 2 + (j >> 1)] * ub[(i & 1) * 2 + (j & 1)];
  };
  std::array<Complex, 16> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s = 0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s += u(i, k) * rho(k, l) * std::conj(u(j, l));
      out[i * 4 + j] = s;
    }
  // Round tiny asymmetry from the double-sided product.
  for (int i = 0; i < 4; ++i) {
    out[i * 4 + i] = Complex(out[i * 4 + i].real(), 0.0);
    for (int j = i + 1; j < 4; ++j) {
      Complex avg = 0.5 * (out[i * 4 + j] + std::conj(out[j * 4 + i]));
      out[i * 4 + j] = avg;
      out[j * 4 + i] = std::conj(avg);
    }
  }
  return HermitianOperator::from_parts_unchecked(4, out);
}

// rho_A x rho_B from two 2x2 densities.
inline HermitianOperator kron2(const HermitianOperator& a, const HermitianOperator& b) {
  std::array<Complex, 16> m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[(2 * i + k) * 4 + (2 * j + l)] = a(i, j) * b(k, l);
  return HermitianOperator::from_parts_unchecked(4, m);
}

}  // namespace testutil
