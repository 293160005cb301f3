#include <cmath>
#include <random>

#include "doctest.h"
#include "spinqcorr/hermitian.hpp"
#include "util.hpp"

using namespace spinqcorr;
using testutil::random_density;
using testutil::random_hermitian;

namespace {

HermitianOperator diag4(double a, double b, double c, double d) {
  return HermitianOperator(4, {a, 0, 0, 0, 0, b, 0, 0, 0, 0, c, 0, 0, 0, 0, d});
}

HermitianOperator bell_phi_plus() {
  // |Phi+> = (|00> + |11>)/sqrt(2)
  std::vector<Complex> m(16, 0.0);
  m[0 * 4 + 0] = m[0 * 4 + 3] = m[3 * 4 + 0] = m[3 * 4 + 3] = 0.5;
  return HermitianOperator(4, m);
}

double recon_error(const HermitianOperator& m, const SpectralDecomposition& d) {
  double err = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      Complex s = 0.0;
      for (int k = 0; k < m.dim(); ++k)
        s += d.vec(i, k) * d.eigenvalues[k] * std::conj(d.vec(j, k));
      err = std::max(err, std::abs(s - m(i, j)));
    }
  return err;
}

double gram_error(const SpectralDecomposition& d) {
  double err = 0.0;
  for (int k = 0; k < d.dim; ++k)
    for (int l = 0; l < d.dim; ++l) {
      Complex s = 0.0;
      for (int i = 0; i < d.dim; ++i) s += std::conj(d.vec(i, k)) * d.vec(i, l);
      err = std::max(err, std::abs(s - (k == l ? 1.0 : 0.0)));
    }
  return err;
}

}  // namespace

TEST_CASE("eigh diagonal case") {
  auto d = eigh(diag4(1, 2, 3, 4));
  for (int i = 0; i < 4; ++i) CHECK(d.eigenvalues[i] == doctest::Approx(i + 1.0).epsilon(1e-14));
}

TEST_CASE("eigh pauli-x spectrum") {
  HermitianOperator px(2, {0, 1, 1, 0});
  auto d = eigh(px);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh of the ferro X state") {
  auto d = eigh(diag4(0.5, 0, 0, 0.5));
  CHECK(d.eigenvalues[0] == doctest::Approx(0.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(d.eigenvalues[2] == doctest::Approx(0.5));
  CHECK(d.eigenvalues[3] == doctest::Approx(0.5));
}

TEST_CASE("eigh rejects non-Hermitian input with a diagnostic") {
  std::array<Complex, 16> m{};
  m[0 * 2 + 0] = 1.0;
  m[0 * 2 + 1] = Complex(0.5, 0.0);
  m[1 * 2 + 0] = Complex(0.9, 0.0);  // asymmetry 0.4
  m[1 * 2 + 1] = 2.0;
  auto bad = HermitianOperator::from_parts_unchecked(2, m);
  try {
    eigh(bad);
    FAIL("expected NonHermitianError");
  } catch (const NonHermitianError& e) {
    CHECK(e.max_asymmetry == doctest::Approx(0.4).epsilon(1e-12));
  }
}

TEST_CASE("eigh reconstruction and orthonormality on 1000 random matrices") {
  std::mt19937 rng(7);
  double worst_recon = 0.0, worst_gram = 0.0;
  bool sorted = true;
  for (int t = 0; t < 1000; ++t) {
    int dim = (t % 2) ? 2 : 4;
    auto m = random_hermitian(rng, dim, 2.0);
    auto d = eigh(m);
    worst_recon = std::max(worst_recon, recon_error(m, d));
    worst_gram = std::max(worst_gram, gram_error(d));
    for (int k = 1; k < dim; ++k) sorted = sorted && d.eigenvalues[k] >= d.eigenvalues[k - 1];
  }
  CHECK(worst_recon < 1e-10);
  CHECK(worst_gram < 1e-10);
  CHECK(sorted);
}

TEST_CASE("matrix_sqrt of the maximally mixed state") {
  auto s = matrix_sqrt(diag4(0.25, 0.25, 0.25, 0.25));
  for (int i = 0; i < 4; ++i) CHECK(s(i, i).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("matrix_sqrt is idempotent on projectors") {
  auto p = bell_phi_plus();  // rank-1 projector
  auto s = matrix_sqrt(p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(s(i, j) - p(i, j)) < 1e-10);
}

TEST_CASE("matrix_sqrt of the ferro state") {
  auto s = matrix_sqrt(diag4(0.5, 0, 0, 0.5));
  CHECK(s(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s(3, 3).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(s(1, 1)) < 1e-12);
}

TEST_CASE("matrix_sqrt squared reproduces the input") {
  std::mt19937 rng(11);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    auto rho = random_density(rng, 4);
    auto s = matrix_sqrt(rho);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += s(i, k) * s(k, j);
        worst = std::max(worst, std::abs(acc - rho(i, j)));
      }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("matrix_sqrt scaling sqrt(cM) = sqrt(c) sqrt(M)") {
  std::mt19937 rng(13);
  auto rho = random_density(rng, 4);
  for (double c : {0.3, 2.0, 17.5}) {
    std::array<Complex, 16> scaled{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) scaled[i * 4 + j] = c * rho(i, j);
    auto s1 = matrix_sqrt(HermitianOperator::from_parts_unchecked(4, scaled));
    auto s2 = matrix_sqrt(rho);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::abs(s1(i, j) - std::sqrt(c) * s2(i, j)));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("matrix_sqrt rejects clearly negative spectra") {
  CHECK_THROWS_AS(matrix_sqrt(diag4(0.5, 0.6, -0.1, 0.0)), InvalidStateError);
}

TEST_CASE("trace_norm basics") {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t)
    CHECK(trace_norm(random_density(rng, 4)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_norm(HermitianOperator(2, {1, 0, 0, -1})) == doctest::Approx(2.0));
  CHECK(trace_norm(partial_transpose_A(bell_phi_plus())) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("partial transpose index bookkeeping") {
  std::mt19937 rng(19);
  auto m = random_hermitian(rng, 4);
  auto pt = partial_transpose_A(m);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) CHECK(pt(2 * i + j, 2 * k + l) == m(2 * k + j, 2 * i + l));
  CHECK(pt.max_asymmetry() < 1e-12);
  CHECK_THROWS_AS(partial_transpose_A(HermitianOperator::identity(2)), DimensionError);
}

TEST_CASE("partial transpose moves the X-state inner coherence to the corners") {
  std::vector<Complex> m(16, 0.0);
  m[0] = 0.3;
  m[5] = 0.3;
  m[10] = 0.2;
  m[15] = 0.2;
  m[1 * 4 + 2] = Complex(0.1, 0.05);
  m[2 * 4 + 1] = std::conj(m[1 * 4 + 2]);
  auto pt = partial_transpose_A(HermitianOperator(4, m));
  CHECK(std::abs(pt(1, 2)) < 1e-15);
  CHECK(std::abs(pt(0, 3) - std::conj(Complex(0.1, 0.05))) < 1e-15);
  CHECK(std::abs(pt(3, 0) - Complex(0.1, 0.05)) < 1e-15);
}

TEST_CASE("partial transpose of a product state keeps spectrum and trace norm") {
  std::mt19937 rng(23);
  auto ra = random_density(rng, 2);
  auto rb = random_density(rng, 2);
  auto prod = testutil::kron2(ra, rb);
  auto pt = partial_transpose_A(prod);
  auto s1 = eigh(prod);
  auto s2 = eigh(pt);
  for (int k = 0; k < 4; ++k)
    CHECK(s2.eigenvalues[k] == doctest::Approx(s1.eigenvalues[k]).epsilon(1e-10));
  CHECK(trace_norm(pt) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial transpose of the Bell state has eigenvalue -1/2") {
  auto d = eigh(partial_transpose_A(bell_phi_plus()));
  CHECK(d.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("trace norm of a partial transpose never drops below 1, equality iff PSD") {
  std::mt19937 rng(29);
  for (int t = 0; t < 200; ++t) {
    auto pt = partial_transpose_A(random_density(rng, 4));
    double tn = trace_norm(pt);
    CHECK(tn >= 1.0 - 1e-12);
    bool at_one = std::abs(tn - 1.0) < 1e-12;
    bool psd = eigh(pt).eigenvalues[0] >= -1e-12;
    CHECK(at_one == psd);
  }
}

TEST_CASE("entropy basics") {
  CHECK(von_neumann_entropy(bell_phi_plus()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diag4(0.25, 0.25, 0.25, 0.25)) == doctest::Approx(2.0));
  CHECK(von_neumann_entropy(diag4(0.5, 0, 0, 0.5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(von_neumann_entropy(diag4(0.5, 0.5, 0.5, 0.5)), InvalidStateError);
  CHECK_THROWS_AS(von_neumann_entropy(diag4(0.6, 0.5, -0.1, 0.0)), InvalidStateError);
}

TEST_CASE("entropy is invariant under unitary conjugation") {
  std::mt19937 rng(31);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    auto rho = random_density(rng, 4);
    double s0 = von_neumann_entropy(rho);
    auto rot = testutil::conjugate_local(rho, testutil::random_unitary2(rng),
                                         testutil::random_unitary2(rng));
    worst = std::max(worst, std::abs(von_neumann_entropy(rot) - s0));
  }
  CHECK(worst < 1e-9);
}
