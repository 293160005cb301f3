#include "spinqcorr/xxz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spinqcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sech(double y) {
  double a = std::abs(y);
  double e = std::exp(-a);
  return 2.0 * e / (1.0 + e * e);
}

// x*coth(x)*sech^2(phi*x); even, -> 1 as x -> 0. Stable for all x > 0.
double integrand_xcosh(double x, double phi) {
  double s = sech(phi * x);
  return x / std::tanh(x) * s * s;
}

// sinh((1-phi)x) / (sinh(x) cosh(phi x)); even, -> (1-phi) as x -> 0.
// Written with expm1 so huge arguments cannot overflow.
double integrand_sinh_ratio(double x, double phi) {
  double num = -std::expm1(-2.0 * (1.0 - phi) * x);
  double den = -std::expm1(-2.0 * x) * (1.0 + std::exp(-2.0 * phi * x));
  return 2.0 * std::exp(-2.0 * phi * x) * num / den;
}

// The four Kato building blocks share two integrand shapes; the x^2 / x^3
// weights reuse them.
struct KatoIntegrals {
  double Ia = 0.0;  // x cosh x / (sinh x cosh^2(phi x))
  double Ib = 0.0;  // sinh((1-phi)x) / (sinh x cosh(phi x))
  double Ia_x2 = 0.0;  // Ia integrand * x^2
  double Ib_x2 = 0.0;  // Ib integrand * x^2
};

QuadratureSpec kato_spec(double phi, const QuadratureSpec& base) {
  QuadratureSpec s = base;
  // These integrands decay like exp(-2 phi |x|), not exp(-pi |x|); stretch
  // the cutoff so the dropped tail sits below the relative tolerance.
  s.tail_cutoff = std::max(base.tail_cutoff, 40.0 / (2.0 * phi));
  return s;
}

KatoIntegrals kato_integrals(double phi, const QuadratureSpec& base, bool with_x2) {
  QuadratureSpec spec = kato_spec(phi, base);
  KatoIntegrals k;
  k.Ia = integrate_even_realline([phi](double x) { return integrand_xcosh(x, phi); }, 1.0, spec);
  k.Ib = integrate_even_realline([phi](double x) { return integrand_sinh_ratio(x, phi); },
                                 1.0 - phi, spec);
  if (with_x2) {
    k.Ia_x2 = integrate_even_realline(
        [phi](double x) { return x * x * integrand_xcosh(x, phi); }, 0.0, spec);
    k.Ib_x2 = integrate_even_realline(
        [phi](double x) { return x * x * integrand_sinh_ratio(x, phi); }, 0.0, spec);
  }
  return k;
}

// Kato r=1: zz and xx for -1 < delta < 1 given phi = arccos(delta)/pi.
void critical_r1(double phi, const QuadratureSpec& base, double& zz, double& xx) {
  KatoIntegrals k = kato_integrals(phi, base, false);
  zz = 1.0 - (2.0 / (kPi * kPi)) * k.Ia +
       (2.0 * (std::cos(kPi * phi) / std::sin(kPi * phi)) / kPi) * k.Ib;
  xx = (std::cos(kPi * phi) / (kPi * kPi)) * k.Ia - k.Ib / (kPi * std::sin(kPi * phi));
}

// Kato r=2. Contains cot(2 pi phi), 1/sin(2 pi phi) and tan(pi phi) factors
// whose poles at phi = 1/2 cancel between terms; the caller dodges that
// point by offset evaluation.
void critical_r2(double phi, const QuadratureSpec& base, double& zz, double& xx) {
  KatoIntegrals k = kato_integrals(phi, base, true);
  const double pi2 = kPi * kPi;
  const double pi3 = pi2 * kPi;
  const double pi4 = pi2 * pi2;
  const double sin_pp = std::sin(kPi * phi);
  const double cos_pp = std::cos(kPi * phi);
  const double sin_2pp = std::sin(2.0 * kPi * phi);
  const double cos_2pp = std::cos(2.0 * kPi * phi);
  const double tan_pp = sin_pp / cos_pp;
  const double cot_2pp = cos_2pp / sin_2pp;

  xx = -(2.0 / (kPi * sin_2pp)) * k.Ib - (3.0 * cos_2pp * tan_pp / pi3) * k.Ib_x2 +
       (cos_2pp / pi2) * k.Ia + (sin_pp * sin_pp / pi4) * k.Ia_x2;

  zz = 1.0 + 4.0 * ((cot_2pp / kPi) * k.Ib + (3.0 * tan_pp / (2.0 * pi3)) * k.Ib_x2) -
       4.0 * (k.Ia / (2.0 * pi2) + (sin_pp * sin_pp / (2.0 * pi4)) * k.Ia_x2);
}

using Cplx = std::complex<double>;

// 1/sinh(pi x) on the contour x = t + i/2 equals -i sech(pi t).
Cplx inv_sinh_pi(double t) { return Cplx(0.0, -sech(kPi * t)); }

// Takahashi r=1 (delta > 1), nu = arccosh(delta).
void gapped_r1(double nu, const QuadratureSpec& spec, double& zz, double& xx) {
  const double coth_nu = 1.0 / std::tanh(nu);
  const double cosh_nu = std::cosh(nu);
  const double sinh_nu = std::sinh(nu);

  auto zz_integrand = [=](Cplx x) {
    Cplx s = std::sin(nu * x);
    Cplx cot = std::cos(nu * x) / s;
    return inv_sinh_pi(x.real()) * (cot * coth_nu - x / (s * s));
  };
  auto xx_integrand = [=](Cplx x) {
    Cplx s = std::sin(nu * x);
    Cplx cot = std::cos(nu * x) / s;
    return inv_sinh_pi(x.real()) * (x / (s * s) * cosh_nu - cot / sinh_nu);
  };
  zz = 1.0 + 2.0 * integrate_shifted_contour(zz_integrand, spec);
  xx = integrate_shifted_contour(xx_integrand, spec);
}

// Takahashi r=2 (delta > 1).
void gapped_r2(double nu, const QuadratureSpec& spec, double& zz, double& xx) {
  const double tanh_nu = std::tanh(nu);
  const double sinh_nu = std::sinh(nu);
  const double cosh_2nu = std::cosh(2.0 * nu);
  const double sinh_2nu = std::sinh(2.0 * nu);
  const double coth_2nu = cosh_2nu / sinh_2nu;
  const double sinh2 = sinh_nu * sinh_nu;

  auto xx_integrand = [=](Cplx x) {
    Cplx s = std::sin(nu * x);
    Cplx s2 = s * s;
    Cplx cot = std::cos(nu * x) / s;
    Cplx bracket = -x / s2 * (3.0 * sinh2 / s2 + 1.0 - 3.0 * cosh_2nu) +
                   cot * (3.0 * cosh_2nu * tanh_nu / s2 - 4.0 / sinh_2nu);
    return inv_sinh_pi(x.real()) * 0.5 * bracket;
  };
  auto zz_integrand = [=](Cplx x) {
    Cplx s = std::sin(nu * x);
    Cplx s2 = s * s;
    Cplx cot = std::cos(nu * x) / s;
    Cplx bracket =
        x / s2 * (3.0 * sinh2 / s2 - 1.0 - cosh_2nu) - cot * (3.0 * tanh_nu / s2 - 4.0 * coth_2nu);
    return inv_sinh_pi(x.real()) * bracket;
  };
  xx = integrate_shifted_contour(xx_integrand, spec);
  zz = 1.0 + integrate_shifted_contour(zz_integrand, spec);
}

void check_bounds(double& zz, double& xx, double delta, int r) {
  for (double* v : {&zz, &xx}) {
    if (!std::isfinite(*v) || std::abs(*v) > 1.0 + 1e-9) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "correlators(delta=%.12g, r=%d): value %.6g outside [-1, 1]", delta, r, *v);
      throw InvalidCorrelatorError(buf);
    }
    *v = std::clamp(*v, -1.0, 1.0);
  }
}

}  // namespace

Regime regime_of(double delta) {
  if (std::abs(delta - 1.0) <= 1e-12) return Regime::Isotropic;
  if (delta <= -1.0) return Regime::Ferro;
  if (delta < 1.0) return Regime::Critical;
  return Regime::Gapped;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Ferro: return "ferro";
    case Regime::Critical: return "critical";
    case Regime::Isotropic: return "isotropic";
    case Regime::Gapped: return "gapped";
  }
  return "?";
}

AuxiliaryParams auxiliary_params(double delta) {
  AuxiliaryParams p;
  Regime reg = regime_of(delta);
  if (reg == Regime::Gapped) p.nu = std::acosh(delta);
  if (reg == Regime::Critical) p.phi = std::acos(delta) / kPi;
  return p;
}

Correlators correlators(double delta, int r) { return correlators(delta, r, QuadratureSpec{}); }

Correlators correlators(double delta, int r, const QuadratureSpec& spec) {
  if (!std::isfinite(delta)) throw DomainError("correlators: delta must be finite");
  if (r != 1 && r != 2) throw DomainError("correlators: r must be 1 or 2");

  Correlators c;
  c.r = r;
  c.delta = delta;
  c.regime = regime_of(delta);

  switch (c.regime) {
    case Regime::Ferro:
      c.zz = 1.0;
      c.xx = 0.0;
      return c;
    case Regime::Isotropic:
      c.zz = c.xx = (r == 1) ? kIsotropicZZ1 : kIsotropicZZ2;
      return c;
    case Regime::Critical: {
      double phi = std::acos(delta) / kPi;
      if (r == 1) {
        critical_r1(phi, spec, c.zz, c.xx);
      } else if (std::abs(phi - 0.5) < 1e-6) {
        // Offset evaluation around the cancelling poles at phi = 1/2.
        const double h = 1e-5;
        double zp, xp, zm, xm;
        critical_r2(0.5 + h, spec, zp, xp);
        critical_r2(0.5 - h, spec, zm, xm);
        // The one-sided values differ by O(h * d/dphi); anything much larger
        // means the pole cancellation failed.
        if (std::abs(zp - zm) > 1e-3 || std::abs(xp - xm) > 1e-3) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "correlators(r=2) offset evaluation disagrees at phi=1/2: dz=%.3e dx=%.3e",
                        zp - zm, xp - xm);
          throw InvalidCorrelatorError(buf);
        }
        c.zz = 0.5 * (zp + zm);
        c.xx = 0.5 * (xp + xm);
      } else {
        critical_r2(phi, spec, c.zz, c.xx);
      }
      break;
    }
    case Regime::Gapped: {
      double nu = std::acosh(delta);
      if (r == 1)
        gapped_r1(nu, spec, c.zz, c.xx);
      else
        gapped_r2(nu, spec, c.zz, c.xx);
      break;
    }
  }
  check_bounds(c.zz, c.xx, delta, r);
  return c;
}

Correlators CorrelatorCache::get(double delta, int r) {
  long long key = std::llround(delta * 1e12);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({key, r});
    if (it != map_.end()) return it->second;
  }
  // Evaluate at the key's canonical value so inputs that collide on the
  // same key (grid points vs stencil offsets, which differ by an ulp)
  // produce one well-defined entry no matter which caller computes it.
  Correlators c = correlators(static_cast<double>(key) / 1e12, r);
  std::lock_guard<std::mutex> lock(mu_);
  map_.emplace(std::make_pair(key, r), c);
  return c;
}

std::size_t CorrelatorCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

}  // namespace spinqcorr
