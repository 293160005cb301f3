#include "spinqcorr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace spinqcorr {

namespace {

std::vector<double> model_boundaries(Model m) {
  if (m == Model::XXZ) return {-1.0, 1.0};
  return {1.0};
}

// Index of the inter-boundary segment containing p (boundaries belong to
// the segment on their Ferro / polarized side, matching the regime tags).
// The LMG domain edge lambda = 0 acts as a boundary so derivative stencils
// never sample negative couplings.
int segment_of(Model m, double p) {
  if (m == Model::XXZ) {
    if (p <= -1.0) return 0;
    if (p < 1.0) return 1;
    return 2;
  }
  if (p < 0.0) return -1;
  return p < 1.0 ? 0 : 1;
}

std::string regime_label(Model m, double p) {
  if (m == Model::XXZ) return std::string(regime_name(regime_of(p)));
  return p < 1.0 ? "broken" : "polarized";
}

int pick_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPINQCORR_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp<unsigned>(hw, 1, 8));
}

double get_measure(const MeasureSet& m, char which) {
  switch (which) {
    case 'N': return m.negativity;
    case 'I': return m.deficit;
    case 'D': return m.tdd;
    default: return m.lqu;
  }
}

void set_measure(MeasureSet& m, char which, double v) {
  switch (which) {
    case 'N': m.negativity = v; break;
    case 'I': m.deficit = v; break;
    case 'D': m.tdd = v; break;
    default: m.lqu = v;
  }
}

const char kMeasureChars[4] = {'N', 'I', 'D', 'U'};

bool selected(const MeasureSelection& sel, char which) {
  switch (which) {
    case 'N': return sel.negativity;
    case 'I': return sel.deficit;
    case 'D': return sel.tdd;
    default: return sel.lqu;
  }
}

}  // namespace

std::string_view critical_kind_name(CriticalKind k) {
  switch (k) {
    case CriticalKind::SuddenBirth: return "sudden-birth";
    case CriticalKind::DerivativeJump: return "derivative-jump";
    case CriticalKind::Kink: return "kink";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (!(param_min < param_max)) throw DomainError("SweepConfig: param_min must be < param_max");
  if (!(step > 0.0)) throw DomainError("SweepConfig: step must be positive");
  if (derivative_step && !(*derivative_step > 0.0))
    throw DomainError("SweepConfig: derivative_step must be positive");
  if (model == Model::XXZ && r != 1 && r != 2) throw DomainError("SweepConfig: r must be 1 or 2");
  if (model == Model::LMG && param_min < 0.0)
    throw DomainError("SweepConfig: lambda must be >= 0 for the LMG model");
  if (!measures.any()) throw DomainError("SweepConfig: empty measure selection");
}

MeasureSet sweep_point_values(Model model, int r, double param, CorrelatorCache* cache) {
  if (model == Model::XXZ) {
    Correlators c = cache ? cache->get(param, r) : correlators(param, r);
    xxz_state(c).validate();  // every sweep point passes the state gate
    return closed_measures_xxz(c);
  }
  return lmg_closed_measures(param).core;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();

  // Grid with the regime-boundary guard: interior points landing exactly on
  // a boundary are offset by step/2 (explicitly requested endpoints stay).
  std::vector<double> grid;
  const std::vector<double> bounds = model_boundaries(cfg.model);
  long nsteps = std::lround(std::floor((cfg.param_max - cfg.param_min) / cfg.step + 1e-9));
  for (long k = 0; k <= nsteps; ++k) {
    double p = cfg.param_min + static_cast<double>(k) * cfg.step;
    if (p > cfg.param_max + 1e-12) break;
    bool interior = k != 0 && k != nsteps;
    if (interior) {
      for (double b : bounds)
        if (std::abs(p - b) < 1e-9) p = b + cfg.step / 2.0;
    }
    grid.push_back(p);
  }

  std::vector<SweepRecord> records(grid.size());
  CorrelatorCache cache;
  const double h = cfg.dstep();

  auto eval_point = [&](std::size_t i) {
    SweepRecord& rec = records[i];
    double p = grid[i];
    rec.param = p;
    rec.regime = regime_label(cfg.model, p);
    try {
      auto value_at = [&](double q) { return sweep_point_values(cfg.model, cfg.r, q, &cache); };
      rec.values = value_at(p);

      int seg = segment_of(cfg.model, p);
      auto same = [&](double q) { return segment_of(cfg.model, q) == seg; };
      MeasureSet d;
      if (same(p - h) && same(p + h)) {
        MeasureSet fp = value_at(p + h), fm = value_at(p - h);
        for (char mc : kMeasureChars)
          set_measure(d, mc, (get_measure(fp, mc) - get_measure(fm, mc)) / (2.0 * h));
      } else if (same(p + h)) {
        if (same(p + 2.0 * h)) {
          MeasureSet f1 = value_at(p + h), f2 = value_at(p + 2.0 * h);
          for (char mc : kMeasureChars)
            set_measure(d, mc,
                        (-3.0 * get_measure(rec.values, mc) + 4.0 * get_measure(f1, mc) -
                         get_measure(f2, mc)) /
                            (2.0 * h));
        } else {
          MeasureSet f1 = value_at(p + h);
          for (char mc : kMeasureChars)
            set_measure(d, mc, (get_measure(f1, mc) - get_measure(rec.values, mc)) / h);
        }
      } else if (same(p - h)) {
        if (same(p - 2.0 * h)) {
          MeasureSet f1 = value_at(p - h), f2 = value_at(p - 2.0 * h);
          for (char mc : kMeasureChars)
            set_measure(d, mc,
                        (3.0 * get_measure(rec.values, mc) - 4.0 * get_measure(f1, mc) +
                         get_measure(f2, mc)) /
                            (2.0 * h));
        } else {
          MeasureSet f1 = value_at(p - h);
          for (char mc : kMeasureChars)
            set_measure(d, mc, (get_measure(rec.values, mc) - get_measure(f1, mc)) / h);
        }
      }
      rec.derivatives = d;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
  };

  int nthreads = pick_thread_count(cfg.threads);
  if (nthreads <= 1 || grid.size() < 4) {
    for (std::size_t i = 0; i < grid.size(); ++i) eval_point(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < grid.size(); i += nthreads) eval_point(i);
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

std::vector<CriticalReport> detect_critical_points(const std::vector<SweepRecord>& records,
                                                   const DetectionOptions& opts) {
  std::vector<CriticalReport> raw;
  if (records.size() < 5) return raw;

  auto median_of = [](std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };

  for (char mc : kMeasureChars) {
    // Sudden 0 <-> positive transitions between adjacent samples.
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      const auto& a = records[i];
      const auto& b = records[i + 1];
      if (!a.ok || !b.ok) continue;
      double va = get_measure(a.values, mc);
      double vb = get_measure(b.values, mc);
      bool birth = va <= opts.zero_tol && vb > 100.0 * opts.zero_tol;
      bool death = vb <= opts.zero_tol && va > 100.0 * opts.zero_tol;
      if (birth || death)
        raw.push_back({0.5 * (a.param + b.param), CriticalKind::SuddenBirth, mc,
                       std::abs(vb - va)});
    }

    // Derivative jumps between adjacent samples.
    std::vector<double> jump(records.size() > 0 ? records.size() - 1 : 0, 0.0);
    std::vector<bool> jok(jump.size(), false);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      if (!records[i].ok || !records[i + 1].ok) continue;
      jump[i] = std::abs(get_measure(records[i + 1].derivatives, mc) -
                         get_measure(records[i].derivatives, mc));
      jok[i] = true;
    }
    for (std::size_t i = 0; i < jump.size(); ++i) {
      if (!jok[i]) continue;
      std::vector<double> win;
      for (std::size_t j = (i > static_cast<std::size_t>(opts.window) ? i - opts.window : 0);
           j < std::min(jump.size(), i + opts.window + 1); ++j)
        if (j != i && jok[j]) win.push_back(jump[j]);
      double med = median_of(win);
      if (jump[i] > opts.ratio * std::max(med, opts.deriv_floor))
        raw.push_back({0.5 * (records[i].param + records[i + 1].param),
                       CriticalKind::DerivativeJump, mc, jump[i]});
    }

    // Second-difference (kink) spikes on the values, spacing-aware.
    std::vector<double> d2(records.size(), 0.0);
    std::vector<bool> d2ok(records.size(), false);
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
      if (!records[i - 1].ok || !records[i].ok || !records[i + 1].ok) continue;
      double hm = records[i].param - records[i - 1].param;
      double hp = records[i + 1].param - records[i].param;
      if (hm <= 0 || hp <= 0) continue;
      double sl = (get_measure(records[i].values, mc) - get_measure(records[i - 1].values, mc)) / hm;
      double sr = (get_measure(records[i + 1].values, mc) - get_measure(records[i].values, mc)) / hp;
      d2[i] = 2.0 * (sr - sl) / (hm + hp);
      d2ok[i] = true;
    }
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
      if (!d2ok[i]) continue;
      std::vector<double> win;
      for (std::size_t j = (i > static_cast<std::size_t>(opts.window) ? i - opts.window : 1);
           j < std::min(records.size() - 1, i + opts.window + 1); ++j)
        if (j != i && d2ok[j]) win.push_back(std::abs(d2[j]));
      double med = median_of(win);
      if (std::abs(d2[i]) > opts.ratio * std::max(med, opts.kink_floor))
        raw.push_back({records[i].param, CriticalKind::Kink, mc, std::abs(d2[i])});
    }
  }

  // Merge reports of the same measure and kind that sit within a few
  // samples of each other, keeping the strongest.
  double typical_step = records.size() > 1
                            ? (records.back().param - records.front().param) /
                                  static_cast<double>(records.size() - 1)
                            : 1.0;
  std::sort(raw.begin(), raw.end(), [](const CriticalReport& x, const CriticalReport& y) {
    if (x.measure != y.measure) return x.measure < y.measure;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.location < y.location;
  });
  std::vector<CriticalReport> merged;
  for (const auto& rep : raw) {
    if (!merged.empty() && merged.back().measure == rep.measure &&
        merged.back().kind == rep.kind &&
        std::abs(merged.back().location - rep.location) < 6.0 * typical_step) {
      if (rep.magnitude > merged.back().magnitude) merged.back() = rep;
    } else {
      merged.push_back(rep);
    }
  }
  return merged;
}

double locate_zero_crossing(char measure, int r, double lo, double hi) {
  if (!(lo < hi)) throw BracketError("locate_zero_crossing: bracket must satisfy lo < hi");
  CorrelatorCache cache;
  auto positive = [&](double delta) {
    return get_measure(sweep_point_values(Model::XXZ, r, delta, &cache), measure) > 1e-12;
  };
  bool plo = positive(lo);
  bool phi = positive(hi);
  if (plo == phi)
    throw BracketError("locate_zero_crossing: measure does not change across the bracket");
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (positive(mid) == plo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace spinqcorr
