#include "spinqcorr/ed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

namespace spinqcorr {

namespace {

#if defined(__GNUC__)
int popcount16(uint32_t x) { return __builtin_popcount(x); }
#else
int popcount16(uint32_t x) {
  int c = 0;
  for (; x; x >>= 1) c += x & 1;
  return c;
}
#endif

struct SectorBasis {
  int n_sites;
  std::vector<uint32_t> states;    // ascending bit patterns with popcount N/2
  std::vector<int32_t> index;      // 2^N lookup, -1 outside the sector

  explicit SectorBasis(int n) : n_sites(n), index(1u << n, -1) {
    for (uint32_t s = 0; s < (1u << n); ++s)
      if (popcount16(s) == n / 2) {
        index[s] = static_cast<int32_t>(states.size());
        states.push_back(s);
      }
  }
};

// y += H x on the Sz=0 sector; H = sum_j [ (1/2)(flip_j,j+1) + delta * szsz/4 ].
void apply_h(const SectorBasis& b, double delta, const std::vector<double>& x,
             std::vector<double>& y) {
  const int n = b.n_sites;
  const size_t dim = b.states.size();
  for (size_t i = 0; i < dim; ++i) {
    uint32_t s = b.states[i];
    double xi = x[i];
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      int k = (j + 1) % n;
      uint32_t bj = (s >> j) & 1u;
      uint32_t bk = (s >> k) & 1u;
      if (bj == bk) {
        diag += 0.25 * delta;
      } else {
        diag -= 0.25 * delta;
        uint32_t s2 = s ^ (1u << j) ^ (1u << k);
        y[b.index[s2]] += 0.5 * xi;
      }
    }
    y[i] += diag * xi;
  }
}

// Symmetric tridiagonal eigenproblem by implicit QL with Wilkinson shifts
// (the classical tql2 scheme). d = diagonal, e = subdiagonal (e[0] unused on
// input as e[i] couples i-1,i here we use e[i] between i and i+1), z = row-major
// k x k matrix accumulating eigenvectors (pass identity; may be null).
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z, int n) {
  auto sign = [](double a, double b) { return b >= 0 ? std::abs(a) : -std::abs(a); };
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw Error("tql2: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
          if (z) {
            for (int k = 0; k < n; ++k) {
              double fk = (*z)[k * n + i + 1];
              (*z)[k * n + i + 1] = s * (*z)[k * n + i] + c * fk;
              (*z)[k * n + i] = c * (*z)[k * n + i] - s * fk;
            }
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

struct Lowest {
  double e0 = 0.0;
  double e1 = 0.0;
  std::vector<double> y0;  // tridiagonal eigenvector of e0
};

Lowest lowest_of_tridiag(const std::vector<double>& alpha, const std::vector<double>& beta,
                         bool with_vector) {
  int k = static_cast<int>(alpha.size());
  std::vector<double> d = alpha;
  std::vector<double> e = beta;  // beta[i] couples i and i+1
  e.resize(k, 0.0);
  std::vector<double> z;
  if (with_vector) {
    z.assign(static_cast<size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) z[i * k + i] = 1.0;
  }
  tql2(d, e, with_vector ? &z : nullptr, k);
  int i0 = 0, i1 = -1;
  for (int i = 1; i < k; ++i)
    if (d[i] < d[i0]) i0 = i;
  for (int i = 0; i < k; ++i)
    if (i != i0 && (i1 < 0 || d[i] < d[i1])) i1 = i;
  Lowest out;
  out.e0 = d[i0];
  out.e1 = (i1 >= 0) ? d[i1] : d[i0];
  if (with_vector) {
    out.y0.resize(k);
    for (int i = 0; i < k; ++i) out.y0[i] = z[i * k + i0];
  }
  return out;
}

// Translation-averaged correlators in state psi.
void correlators_in_state(const SectorBasis& b, const std::vector<double>& psi, int r, double& zz,
                          double& xx) {
  const int n = b.n_sites;
  zz = 0.0;
  xx = 0.0;
  for (size_t i = 0; i < b.states.size(); ++i) {
    uint32_t s = b.states[i];
    double w = psi[i] * psi[i];
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      int k = (j + r) % n;
      uint32_t bj = (s >> j) & 1u;
      uint32_t bk = (s >> k) & 1u;
      acc += (bj == bk) ? 1.0 : -1.0;
      if (bj != bk) {
        uint32_t s2 = s ^ (1u << j) ^ (1u << k);
        xx += psi[b.index[s2]] * psi[i];
      }
    }
    zz += w * acc;
  }
  zz /= n;
  xx /= n;
}

}  // namespace

EdResult ed_correlators(int n_sites, double delta, int r) {
  if (n_sites % 2 != 0 || n_sites < 8 || n_sites > 16)
    throw DomainError("ed_correlators: N must be even and within [8, 16]");
  if (r != 1 && r != 2) throw DomainError("ed_correlators: r must be 1 or 2");
  if (!std::isfinite(delta)) throw DomainError("ed_correlators: delta must be finite");

  SectorBasis basis(n_sites);
  const size_t dim = basis.states.size();
  const int max_iter = std::min<size_t>(dim, 320);

  // Lanczos with full reorthogonalization; fixed seed keeps runs bit-stable.
  std::mt19937 rng(0x5eed1234u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> V;
  std::vector<double> alpha, beta;

  std::vector<double> v(dim);
  for (double& x : v) x = gauss(rng);
  double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  for (double& x : v) x /= nrm;
  V.push_back(v);

  double prev_e0 = 1e300;
  Lowest low;
  int k = 0;
  for (; k < max_iter; ++k) {
    std::vector<double> w(dim, 0.0);
    apply_h(basis, delta, V[k], w);
    double a = std::inner_product(w.begin(), w.end(), V[k].begin(), 0.0);
    alpha.push_back(a);
    // w -= a v_k (+ beta v_{k-1} folded into the reorthogonalization below)
    for (size_t i = 0; i < dim; ++i) w[i] -= a * V[k][i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : V) {
        double ov = std::inner_product(w.begin(), w.end(), q.begin(), 0.0);
        if (ov != 0.0)
          for (size_t i = 0; i < dim; ++i) w[i] -= ov * q[i];
      }
    }
    double b = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));

    if ((k + 1) % 5 == 0 || b < 1e-12 || k + 1 == max_iter) {
      low = lowest_of_tridiag(alpha, beta, false);
      if (std::abs(low.e0 - prev_e0) < 1e-13 * (1.0 + std::abs(low.e0)) || b < 1e-12) break;
      prev_e0 = low.e0;
    }
    if (b < 1e-12) break;
    beta.push_back(b);
    for (double& x : w) x /= b;
    V.push_back(std::move(w));
  }

  low = lowest_of_tridiag(alpha, beta, true);
  std::vector<double> psi(dim, 0.0);
  for (size_t j = 0; j < low.y0.size(); ++j)
    for (size_t i = 0; i < dim; ++i) psi[i] += low.y0[j] * V[j][i];
  double nrm2 = std::sqrt(std::inner_product(psi.begin(), psi.end(), psi.begin(), 0.0));
  for (double& x : psi) x /= nrm2;

  double e_sector = low.e0;
  double sector_gap = low.e1 - low.e0;

  EdResult out;
  out.correlators.r = r;
  out.correlators.delta = delta;
  out.correlators.regime = regime_of(delta);

  // The fully polarized state (outside the Sz=0 sector) has energy N*delta/4
  // and is the true ground state for delta < -1.
  double e_ferro = n_sites * delta / 4.0;
  double zz_sector, xx_sector;
  correlators_in_state(basis, psi, r, zz_sector, xx_sector);

  if (e_ferro < e_sector - 1e-12) {
    out.correlators.zz = 1.0;
    out.correlators.xx = 0.0;
    out.energy = e_ferro;
    out.gap = e_sector - e_ferro;
    out.degenerate = out.gap < 1e-10;
    out.has_second = true;
    out.zz_second = zz_sector;
    out.xx_second = xx_sector;
    return out;
  }

  out.correlators.zz = zz_sector;
  out.correlators.xx = xx_sector;
  out.energy = e_sector;
  out.gap = std::min(sector_gap, e_ferro - e_sector);
  out.degenerate = out.gap < 1e-10;
  if (out.degenerate && e_ferro - e_sector < 1e-10) {
    out.has_second = true;
    out.zz_second = 1.0;
    out.xx_second = 0.0;
  }
  return out;
}

}  // namespace spinqcorr
