#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinqcorr/io.hpp"
#include "spinqcorr/validate.hpp"

namespace {

using namespace spinqcorr;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 2;     // some sweep points failed
constexpr int kExitFailure = 1;     // validation suite failed
constexpr int kExitUsage = 64;      // bad flags
constexpr int kExitCantCreate = 73; // unwritable output

ordered_json measure_set_json(const MeasureSet& m) {
  ordered_json j;
  j["negativity"] = m.negativity;
  j["deficit"] = m.deficit;
  j["tdd"] = m.tdd;
  j["lqu"] = m.lqu;
  return j;
}

int cmd_sweep(const std::string& manifest_in, SweepConfig cfg, bool cfg_from_flags,
              const std::string& out_base, const std::string& command_line, bool detect,
              const DetectionOptions& detect_opts) {
  if (!manifest_in.empty()) {
    std::ifstream f(manifest_in);
    if (!f) {
      std::fprintf(stderr, "error: cannot read manifest '%s'\n", manifest_in.c_str());
      return kExitUsage;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    SweepConfig loaded = config_from_manifest(ss.str());
    if (!cfg_from_flags) cfg = loaded;
  }
  cfg.validate();

  std::vector<SweepRecord> records = run_sweep(cfg);
  std::size_t failures = 0;
  for (const auto& r : records)
    if (!r.ok) ++failures;

  try {
    write_file_atomic(out_base + ".csv", sweep_csv(records, cfg.measures));
    write_file_atomic(out_base + ".manifest.json", manifest_json(command_line, cfg));
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCantCreate;
  }

  std::printf("wrote %s.csv (%zu rows, %zu failed) and %s.manifest.json\n", out_base.c_str(),
              records.size(), failures, out_base.c_str());

  if (detect) {
    auto reports = detect_critical_points(records, detect_opts);
    for (const auto& rep : reports)
      std::printf("critical %c %-15s at %s (magnitude %s)\n", rep.measure,
                  std::string(critical_kind_name(rep.kind)).c_str(),
                  format_g12(rep.location).c_str(), format_g12(rep.magnitude).c_str());
    if (reports.empty()) std::printf("no critical points detected\n");
  }

  if (failures) {
    for (const auto& r : records)
      if (!r.ok) std::fprintf(stderr, "  point %.12g failed: %s\n", r.param, r.error.c_str());
    return kExitPartial;
  }
  return kExitOk;
}

int cmd_point(Model model, int r, double delta, double lambda, bool have_delta) {
  ordered_json j;
  if (model == Model::XXZ) {
    Correlators c = correlators(delta, r);
    XState s = xxz_state(c);
    j["model"] = "xxz";
    j["delta"] = delta;
    j["r"] = r;
    j["regime"] = std::string(regime_name(c.regime));
    j["correlators"] = {{"zz", c.zz}, {"xx", c.xx}};
    j["state"] = {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d},
                  {"z", s.z.real()}, {"w", s.w.real()}};
    j["closed"] = measure_set_json(closed_measures_xxz(c));

    HermitianOperator rho = s.to_operator();
    MinimizerReport rep_i, rep_d;
    MeasureSet def;
    def.negativity = negativity(rho);
    def.deficit = information_deficit(rho, &rep_i);
    def.tdd = trace_distance_discord(rho, &rep_d);
    def.lqu = lqu(rho);
    j["definitional"] = measure_set_json(def);
    j["optimal_basis"] = {
        {"deficit", {{"theta", rep_i.best_basis.theta}, {"phi", rep_i.best_basis.phi}}},
        {"tdd", {{"theta", rep_d.best_basis.theta}, {"phi", rep_d.best_basis.phi}}}};
  } else {
    if (have_delta) throw DomainError("point: the LMG model takes --lambda, not --delta");
    LmgPoint p = lmg_validate(lambda);
    XState s = lmg_pair_state(lambda, true);
    j["model"] = "lmg";
    j["lambda"] = lambda;
    j["alpha"] = p.alpha;
    j["phase"] = lambda < 1.0 ? "broken" : "polarized";
    j["state"] = {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d},
                  {"z", s.z.real()}, {"w", s.w.real()}};
    j["closed"] = measure_set_json(p.closed);
    j["definitional"] = measure_set_json(p.definitional);
    j["lqu_dual"] = {{"definitional", p.definitional.lqu},
                     {"closed_1_minus_lambda_sq", p.closed.lqu},
                     {"paper_1_minus_lambda", p.lqu_paper}};
  }
  std::printf("%s\n", j.dump(2).c_str());
  return kExitOk;
}

int cmd_validate(const std::string& suite, const std::vector<int>& ed_sizes,
                 const std::string& json_out) {
  std::vector<SuiteResult> results;
  if (suite == "closed-forms" || suite == "all") results.push_back(validate_closed_forms());
  if (suite == "ed" || suite == "all") results.push_back(validate_ed(ed_sizes));
  if (suite == "lmg" || suite == "all") results.push_back(validate_lmg());
  if (results.empty()) {
    std::fprintf(stderr, "error: unknown suite '%s' (closed-forms, ed, lmg, all)\n",
                 suite.c_str());
    return kExitUsage;
  }

  bool all_pass = true;
  ordered_json report = ordered_json::array();
  for (const auto& r : results) {
    std::printf("== suite %s ==\n", r.name.c_str());
    for (const auto& line : r.lines) std::printf("  %s\n", line.c_str());
    for (const auto& f : r.findings) std::printf("  %s\n", f.c_str());
    std::printf("  %s: %s (max residual %.3e)\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.max_residual);
    all_pass = all_pass && r.passed;

    ordered_json jr;
    jr["suite"] = r.name;
    jr["passed"] = r.passed;
    jr["max_residual"] = r.max_residual;
    jr["lines"] = r.lines;
    jr["findings"] = r.findings;
    report.push_back(jr);
  }
  if (!json_out.empty()) {
    try {
      write_file_atomic(json_out, report.dump(2) + "\n");
    } catch (const Error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitCantCreate;
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinqcorr: quantum-correlation measures for the XXZ chain and the LMG pair state"};
  app.require_subcommand(1);

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  // sweep
  auto* sweep = app.add_subcommand("sweep", "sweep a control parameter and write CSV + manifest");
  std::string model_s = "xxz", measures_s = "N,I,D,U", out_base = "sweep", manifest_in;
  SweepConfig cfg;
  double dstep = 0.0;
  sweep->add_option("--model", model_s, "xxz or lmg");
  sweep->add_option("--r", cfg.r, "spin separation (xxz): 1 or 2");
  auto* opt_from = sweep->add_option("--from", cfg.param_min, "sweep start");
  sweep->add_option("--to", cfg.param_max, "sweep end");
  sweep->add_option("--step", cfg.step, "grid step");
  sweep->add_option("--dstep", dstep, "derivative stencil width (default: step)");
  sweep->add_option("--measures", measures_s, "subset of N,I,D,U");
  sweep->add_option("--out", out_base, "output base name (<out>.csv, <out>.manifest.json)");
  sweep->add_option("--threads", cfg.threads, "worker cap (also SPINQCORR_THREADS)");
  sweep->add_option("--manifest", manifest_in, "re-run the sweep described by a manifest file");
  bool detect = false;
  DetectionOptions detect_opts;
  sweep->add_flag("--detect", detect, "report critical points found on the sweep");
  sweep->add_option("--detect-ratio", detect_opts.ratio, "spike-over-median factor (default 10)");
  sweep->add_option("--detect-window", detect_opts.window,
                    "median window half-width in samples (default 8)");

  // point
  auto* point = app.add_subcommand("point", "inspect a single parameter point as JSON");
  std::string p_model_s = "xxz";
  int p_r = 1;
  double p_delta = 1.0, p_lambda = 0.0;
  point->add_option("--model", p_model_s, "xxz or lmg");
  point->add_option("--r", p_r, "spin separation (xxz)");
  auto* opt_delta = point->add_option("--delta", p_delta, "anisotropy (xxz)");
  auto* opt_lambda = point->add_option("--lambda", p_lambda, "control parameter (lmg)");

  // validate
  auto* validate = app.add_subcommand("validate", "run the oracle-equivalence suites");
  std::string suite = "all", json_out;
  std::string ed_sizes_s;
  validate->add_option("--suite", suite, "closed-forms, ed, lmg or all");
  validate->add_option("--n", ed_sizes_s, "comma-separated ED ring sizes (default 12,14,16)");
  validate->add_option("--json", json_out, "also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      cfg.model = model_from_name(model_s);
      cfg.measures = measures_from_string(measures_s);
      if (dstep > 0.0) cfg.derivative_step = dstep;
      bool cfg_from_flags = opt_from->count() > 0;
      return cmd_sweep(manifest_in, cfg, cfg_from_flags, out_base, command_line, detect,
                       detect_opts);
    }
    if (point->parsed()) {
      Model m = model_from_name(p_model_s);
      if (m == Model::XXZ && opt_delta->count() == 0)
        throw DomainError("point: --delta is required for the xxz model");
      if (m == Model::LMG && opt_lambda->count() == 0)
        throw DomainError("point: --lambda is required for the lmg model");
      return cmd_point(m, p_r, p_delta, p_lambda, opt_delta->count() > 0);
    }
    if (validate->parsed()) {
      std::vector<int> sizes;
      if (!ed_sizes_s.empty()) {
        std::stringstream ss(ed_sizes_s);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
      }
      return cmd_validate(suite, sizes, json_out);
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
