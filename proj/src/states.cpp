#include "spinqcorr/states.hpp"

#include <cmath>
#include <cstdio>

namespace spinqcorr {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

void XState::validate() const {
  double tr = a + b + c + d;
  if (std::abs(tr - 1.0) > 1e-12) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "XState: trace %.15f is not 1", tr);
    throw InvalidStateError(buf);
  }
  if (a < -1e-12 || b < -1e-12 || c < -1e-12 || d < -1e-12)
    throw InvalidStateError("XState: negative diagonal entry");
  if (std::abs(z) > std::sqrt(std::max(0.0, b * c)) + 1e-10)
    throw InvalidStateError("XState: |z| exceeds sqrt(bc), state not PSD");
  if (std::abs(w) > std::sqrt(std::max(0.0, a * d)) + 1e-10)
    throw InvalidStateError("XState: |w| exceeds sqrt(ad), state not PSD");
}

HermitianOperator XState::to_operator() const {
  std::array<Complex, 16> m{};
  m[0 * 4 + 0] = a;
  m[1 * 4 + 1] = b;
  m[2 * 4 + 2] = c;
  m[3 * 4 + 3] = d;
  m[1 * 4 + 2] = z;
  m[2 * 4 + 1] = std::conj(z);
  m[0 * 4 + 3] = w;
  m[3 * 4 + 0] = std::conj(w);
  return HermitianOperator::from_parts_unchecked(4, m);
}

void MeasurementBasis::validate() const {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("MeasurementBasis: theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < kTwoPi)) throw DomainError("MeasurementBasis: phi outside [0, 2pi)");
}

HermitianOperator MeasurementBasis::projector(int j) const {
  Complex v0, v1;
  if (j == 0) {
    v0 = std::cos(theta);
    v1 = std::polar(std::sin(theta), phi);
  } else if (j == 1) {
    v0 = -std::polar(std::sin(theta), -phi);
    v1 = std::cos(theta);
  } else {
    throw DomainError("MeasurementBasis: projector index must be 0 or 1");
  }
  std::array<Complex, 16> m{};
  m[0 * 2 + 0] = v0 * std::conj(v0);
  m[0 * 2 + 1] = v0 * std::conj(v1);
  m[1 * 2 + 0] = v1 * std::conj(v0);
  m[1 * 2 + 1] = v1 * std::conj(v1);
  return HermitianOperator::from_parts_unchecked(2, m);
}

XState xxz_state(const Correlators& c) {
  XState s;
  s.a = s.d = (1.0 + c.zz) / 4.0;
  s.b = s.c = (1.0 - c.zz) / 4.0;
  s.z = c.xx / 2.0;
  s.w = 0.0;
  try {
    s.validate();
  } catch (const InvalidStateError& e) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "xxz_state(delta=%.12g, r=%d): %s", c.delta, c.r, e.what());
    throw InvalidCorrelatorError(buf);
  }
  return s;
}

XState lmg_pair_state(double lambda, bool same_mode) {
  if (!(lambda >= 0.0)) throw DomainError("lmg_pair_state: lambda must be >= 0");
  double cos2a = std::min(lambda, 1.0);
  double alpha = 0.5 * std::acos(cos2a);
  double c2 = std::cos(alpha) * std::cos(alpha);
  double s2 = std::sin(alpha) * std::sin(alpha);
  XState s;
  if (same_mode) {
    s.a = s.d = 0.0;
    s.b = c2;
    s.c = s2;
    s.z = std::sin(alpha) * std::cos(alpha);
    s.w = 0.0;
  } else {
    s.a = s2 * c2;
    s.b = c2 * c2;
    s.c = s2 * s2;
    s.d = s2 * c2;
    s.z = 0.0;
    s.w = 0.0;
  }
  s.validate();
  return s;
}

HermitianOperator project_measure_A(const HermitianOperator& rho, const MeasurementBasis& basis) {
  if (rho.dim() != 4) throw DimensionError("project_measure_A: state must be 4x4");
  basis.validate();
  std::array<Complex, 16> out{};
  for (int j = 0; j < 2; ++j) {
    HermitianOperator p = basis.projector(j);
    // (P x I) rho (P x I), written directly on 2x2 blocks:
    // out_block(u,v) += P(u,r) rho_block(r,s) P(s,v).
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        for (int r = 0; r < 2; ++r)
          for (int s = 0; s < 2; ++s) {
            Complex coef = p(u, r) * p(s, v);
            if (coef == Complex(0.0, 0.0)) continue;
            for (int bi = 0; bi < 2; ++bi)
              for (int bj = 0; bj < 2; ++bj)
                out[(2 * u + bi) * 4 + (2 * v + bj)] += coef * rho(2 * r + bi, 2 * s + bj);
          }
  }
  // Clean Hermitian roundoff.
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

HermitianOperator project_measure_A(const XState& rho, const MeasurementBasis& basis) {
  rho.validate();
  return project_measure_A(rho.to_operator(), basis);
}

}  // namespace spinqcorr
