#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinqcorr/lmg.hpp"
#include "spinqcorr/measures.hpp"

namespace spinqcorr {

enum class Model { XXZ, LMG };

/// Which of the four measures a sweep evaluates.
struct MeasureSelection {
  bool negativity = true;
  bool deficit = true;
  bool tdd = true;
  bool lqu = true;

  bool any() const { return negativity || deficit || tdd || lqu; }
};

struct SweepConfig {
  Model model = Model::XXZ;
  int r = 1;  // XXZ only
  double param_min = -1.5;
  double param_max = 3.0;
  double step = 0.01;
  /// Stencil width for the finite-difference derivatives; defaults to step.
  std::optional<double> derivative_step;
  MeasureSelection measures;
  int threads = 0;  // 0: decide from SPINQCORR_THREADS / hardware

  void validate() const;
  double dstep() const { return derivative_step.value_or(step); }
};

/// One sweep sample. Regime boundaries are never crossed by a derivative
/// stencil; the regime label is the XXZ regime or the LMG phase.
struct SweepRecord {
  double param = 0.0;
  MeasureSet values;
  MeasureSet derivatives;
  std::string regime;
  bool ok = true;
  std::string error;
};

enum class CriticalKind { SuddenBirth, DerivativeJump, Kink };
std::string_view critical_kind_name(CriticalKind k);

struct CriticalReport {
  double location = 0.0;
  CriticalKind kind = CriticalKind::SuddenBirth;
  char measure = 'N';  // 'N', 'I', 'D' or 'U'
  double magnitude = 0.0;
};

struct DetectionOptions {
  double zero_tol = 1e-9;     // "value is zero" threshold
  double ratio = 10.0;        // spike-over-local-median factor
  int window = 8;             // half width of the median window (in samples)
  double deriv_floor = 1e-6;  // absolute floors keep flat regions quiet
  double kink_floor = 1e-4;
};

/// Grid sweep with symmetric central-difference derivatives, switching to
/// one-sided stencils next to the regime boundaries. Failures are isolated
/// per point. Points are evaluated in parallel (bounded by
/// SPINQCORR_THREADS) with a deterministic ordered merge.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// Flags sudden 0 <-> positive value transitions, derivative jumps and
/// second-difference spikes, each against a scale-free local-median
/// threshold. Returns an empty list when nothing is found.
std::vector<CriticalReport> detect_critical_points(const std::vector<SweepRecord>& records,
                                                   const DetectionOptions& opts = {});

/// Bisection (to width 1e-6) of the boundary where a closed-form XXZ
/// measure stops being positive. Throws BracketError when the measure does
/// not change between the bracket ends.
double locate_zero_crossing(char measure, int r, double lo, double hi);

/// Closed-form measure values at one parameter point (the sweep fast path).
MeasureSet sweep_point_values(Model model, int r, double param, CorrelatorCache* cache);

}  // namespace spinqcorr
