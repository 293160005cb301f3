#include <cmath>

#include "doctest.h"
#include "spinqcorr/sweep.hpp"

using namespace spinqcorr;

TEST_CASE("config validation") {
  SweepConfig bad;
  bad.param_min = 2.0;
  bad.param_max = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  SweepConfig bad2;
  bad2.step = 0.0;
  CHECK_THROWS_AS(bad2.validate(), DomainError);
  SweepConfig bad3;
  bad3.r = 3;
  CHECK_THROWS_AS(bad3.validate(), DomainError);
  SweepConfig bad4;
  bad4.model = Model::LMG;
  bad4.param_min = -0.5;
  CHECK_THROWS_AS(bad4.validate(), DomainError);
}

TEST_CASE("lmg sweep derivatives match the analytic negativity slope") {
  SweepConfig cfg;
  cfg.model = Model::LMG;
  cfg.param_min = 0.05;
  cfg.param_max = 0.9;
  cfg.step = 0.05;
  cfg.derivative_step = 1e-4;
  auto records = run_sweep(cfg);
  for (const auto& rec : records) {
    REQUIRE(rec.ok);
    double lambda = rec.param;
    double expect = -lambda / (2.0 * std::sqrt(1.0 - lambda * lambda));
    CHECK(std::abs(rec.derivatives.negativity - expect) < 1e-5);
  }
}

TEST_CASE("regime boundary guard keeps samples off the critical points") {
  SweepConfig cfg;
  cfg.param_min = -1.3;
  cfg.param_max = 1.3;
  cfg.step = 0.1;  // would land exactly on -1 and 1
  auto records = run_sweep(cfg);
  for (const auto& rec : records) {
    CHECK(std::abs(rec.param + 1.0) > 1e-9);
    CHECK(std::abs(rec.param - 1.0) > 1e-9);
  }
  // The offset samples sit half a step above the boundaries.
  bool found_m1 = false, found_p1 = false;
  for (const auto& rec : records) {
    found_m1 = found_m1 || std::abs(rec.param + 0.95) < 1e-9;
    found_p1 = found_p1 || std::abs(rec.param - 1.05) < 1e-9;
  }
  CHECK(found_m1);
  CHECK(found_p1);
}

TEST_CASE("explicitly requested boundary endpoints are kept") {
  SweepConfig cfg;
  cfg.param_min = -1.0;
  cfg.param_max = -0.9;
  cfg.step = 0.05;
  auto records = run_sweep(cfg);
  CHECK(records.front().param == -1.0);
  CHECK(records.front().regime == "ferro");
  REQUIRE(records.front().ok);
  CHECK(records.front().values.negativity == 0.0);
}

TEST_CASE("negativity is born at the ferromagnetic critical point") {
  SweepConfig cfg;
  cfg.param_min = -1.3;
  cfg.param_max = -0.7;
  cfg.step = 0.02;
  auto records = run_sweep(cfg);
  for (const auto& rec : records) {
    REQUIRE(rec.ok);
    if (rec.param <= -1.0)
      CHECK(rec.values.negativity == 0.0);
    else
      CHECK(rec.values.negativity > 0.0);
  }
  auto reports = detect_critical_points(records);
  bool n_birth = false;
  for (const auto& rep : reports)
    n_birth = n_birth ||
              (rep.measure == 'N' && rep.kind == CriticalKind::SuddenBirth &&
               std::abs(rep.location + 1.0) < 0.02);
  CHECK(n_birth);
}

TEST_CASE("lmg sweep reports the quantum phase transition for every measure") {
  SweepConfig cfg;
  cfg.model = Model::LMG;
  cfg.param_min = 0.0;
  cfg.param_max = 2.0;
  cfg.step = 0.02;
  auto records = run_sweep(cfg);
  auto reports = detect_critical_points(records);
  for (char mc : {'N', 'I', 'D', 'U'}) {
    bool found = false;
    for (const auto& rep : reports)
      found = found || (rep.measure == mc && std::abs(rep.location - 1.0) < 0.04);
    CHECK_MESSAGE(found, "no report near lambda = 1 for measure ", mc);
  }
  // All measures vanish identically in the polarized phase.
  for (const auto& rec : records)
    if (rec.param >= 1.0) {
      CHECK(rec.values.negativity == 0.0);
      CHECK(rec.values.lqu == 0.0);
    }
}

TEST_CASE("detector needs at least five records") {
  std::vector<SweepRecord> few(4);
  CHECK(detect_critical_points(few).empty());
}

TEST_CASE("locate_zero_crossing finds the r=2 negativity window edge") {
  double edge = locate_zero_crossing('N', 2, -0.5, -0.2);
  CHECK(std::abs(edge - (-0.358733)) < 1e-3);
}

TEST_CASE("locate_zero_crossing rejects sign-free brackets") {
  CHECK_THROWS_AS(locate_zero_crossing('N', 2, 0.5, 1.0), BracketError);
  CHECK_THROWS_AS(locate_zero_crossing('N', 2, -0.2, -0.5), BracketError);
}

TEST_CASE("lmg sweep value column carries the definitional-consistent lqu") {
  MeasureSet m = sweep_point_values(Model::LMG, 1, 0.6, nullptr);
  CHECK(m.lqu == doctest::Approx(0.64));
}
