#include <cmath>
#include <random>

#include "doctest.h"
#include "spinqcorr/measures.hpp"
#include "spinqcorr/states.hpp"

using namespace spinqcorr;

namespace {

constexpr double kPi = 3.14159265358979323846;

Correlators make_corr(double zz, double xx, int r = 1, double delta = 0.0) {
  Correlators c;
  c.zz = zz;
  c.xx = xx;
  c.r = r;
  c.delta = delta;
  c.regime = regime_of(delta);
  return c;
}

}  // namespace

TEST_CASE("xxz_state entries") {
  XState ferro = xxz_state(make_corr(1.0, 0.0, 1, -2.0));
  CHECK(ferro.a == doctest::Approx(0.5));
  CHECK(ferro.b == doctest::Approx(0.0));
  CHECK(ferro.c == doctest::Approx(0.0));
  CHECK(ferro.d == doctest::Approx(0.5));
  CHECK(std::abs(ferro.z) == doctest::Approx(0.0));

  XState mixed = xxz_state(make_corr(0.0, 0.0));
  CHECK(mixed.a == doctest::Approx(0.25));
  CHECK(mixed.b == doctest::Approx(0.25));

  const double v = (1.0 - 4.0 * std::log(2.0)) / 3.0;
  XState iso = xxz_state(make_corr(v, v, 1, 1.0));
  CHECK(iso.a == doctest::Approx(0.102284).epsilon(1e-5));
  CHECK(iso.b == doctest::Approx(0.397716).epsilon(1e-5));
  CHECK(iso.z.real() == doctest::Approx(-0.295432).epsilon(1e-5));
}

TEST_CASE("xxz_state rejects non-PSD correlators naming the point") {
  Correlators bad = make_corr(0.999, 0.9, 2, 0.123);
  try {
    xxz_state(bad);
    FAIL("expected InvalidCorrelatorError");
  } catch (const InvalidCorrelatorError& e) {
    std::string msg = e.what();
    CHECK(msg.find("0.123") != std::string::npos);
    CHECK(msg.find("r=2") != std::string::npos);
  }
}

TEST_CASE("lmg_pair_state same-mode") {
  XState s0 = lmg_pair_state(0.0, true);
  CHECK(s0.b == doctest::Approx(0.5));
  CHECK(s0.c == doctest::Approx(0.5));
  CHECK(s0.z.real() == doctest::Approx(0.5));

  XState pol = lmg_pair_state(1.7, true);
  CHECK(pol.a == 0.0);
  CHECK(pol.b == doctest::Approx(1.0));
  CHECK(pol.c == doctest::Approx(0.0));
  CHECK(std::abs(pol.z) == 0.0);

  XState s6 = lmg_pair_state(0.6, true);
  CHECK(s6.b == doctest::Approx(0.8));
  CHECK(s6.c == doctest::Approx(0.2));
  CHECK(s6.z.real() == doctest::Approx(0.4));

  CHECK_THROWS_AS(lmg_pair_state(-0.1, true), DomainError);
}

TEST_CASE("lmg same-mode state is pure for every lambda < 1") {
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 0.99}) {
    auto d = eigh(lmg_pair_state(lambda, true).to_operator());
    CHECK(d.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("lmg different-mode state is diagonal and uncorrelated") {
  for (double lambda : {0.0, 0.4, 0.8, 1.5}) {
    XState s = lmg_pair_state(lambda, false);
    CHECK(std::abs(s.z) == 0.0);
    CHECK(std::abs(s.w) == 0.0);
    MeasureSet m = definitional_measures(s);
    CHECK(m.negativity <= 1e-10);
    CHECK(m.deficit <= 1e-10);
    CHECK(m.tdd <= 1e-10);
    CHECK(m.lqu <= 1e-10);
  }
}

TEST_CASE("projectors form a complete orthogonal pair at random angles") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ut(0.0, kPi), up(0.0, 2.0 * kPi);
  for (int t = 0; t < 100; ++t) {
    MeasurementBasis b{ut(rng), up(rng)};
    auto p0 = b.projector(0);
    auto p1 = b.projector(1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Complex sum = p0(i, j) + p1(i, j);
        CHECK(std::abs(sum - (i == j ? 1.0 : 0.0)) < 1e-14);
        Complex prod = p0(i, 0) * p1(0, j) + p0(i, 1) * p1(1, j);
        CHECK(std::abs(prod) < 1e-14);
      }
  }
}

TEST_CASE("basis validation") {
  CHECK_THROWS_AS((MeasurementBasis{-0.1, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS((MeasurementBasis{0.5, 6.5}).validate(), DomainError);
  CHECK_THROWS_AS((MeasurementBasis{0.0, 0.0}).projector(2), DomainError);
}

TEST_CASE("computational-basis measurement keeps only the diagonal of an X state") {
  XState s = xxz_state(make_corr(-0.3, -0.5));
  HermitianOperator out = project_measure_A(s, MeasurementBasis{0.0, 0.0});
  CHECK(out(0, 0).real() == doctest::Approx(s.a).epsilon(1e-14));
  CHECK(out(1, 1).real() == doctest::Approx(s.b).epsilon(1e-14));
  CHECK(out(2, 2).real() == doctest::Approx(s.c).epsilon(1e-14));
  CHECK(out(3, 3).real() == doctest::Approx(s.d).epsilon(1e-14));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(out(i, j)) < 1e-14);
}

TEST_CASE("measuring twice equals measuring once") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> ut(0.0, kPi), up(0.0, 2.0 * kPi);
  XState s = xxz_state(make_corr(-0.3, -0.55));
  for (int t = 0; t < 50; ++t) {
    MeasurementBasis b{ut(rng), up(rng)};
    auto once = project_measure_A(s, b);
    auto twice = project_measure_A(once, b);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(once(i, j) - twice(i, j)));
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("measurement channel preserves trace and positivity, never lowers entropy") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> ut(0.0, kPi), up(0.0, 2.0 * kPi);
  std::vector<XState> states = {
      xxz_state(correlators(0.5, 1)),
      xxz_state(correlators(2.0, 1)),
      xxz_state(correlators(-0.5, 2)),
      lmg_pair_state(0.6, true),
  };
  for (int t = 0; t < 1000; ++t) {
    const XState& s = states[t % states.size()];
    MeasurementBasis b{ut(rng), up(rng)};
    auto out = project_measure_A(s, b);
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-12);
    auto d = eigh(out);
    CHECK(d.eigenvalues[0] > -1e-12);
    CHECK(von_neumann_entropy(out) >=
          von_neumann_entropy(s.to_operator()) - 1e-10);
  }
}

TEST_CASE("xstate validation gates") {
  XState bad;
  bad.a = 0.6;  // trace 1.1
  CHECK_THROWS_AS(bad.validate(), InvalidStateError);
  XState neg;
  neg.a = -0.05;
  neg.b = 0.55;
  CHECK_THROWS_AS(neg.validate(), InvalidStateError);
  XState coh;
  coh.z = Complex(0.3, 0.0);  // exceeds sqrt(bc) = 0.25
  CHECK_THROWS_AS(coh.validate(), InvalidStateError);
}
