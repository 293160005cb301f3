#include "spinqcorr/io.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace spinqcorr {

using ordered_json = nlohmann::ordered_json;

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string model_name(Model m) { return m == Model::XXZ ? "xxz" : "lmg"; }

Model model_from_name(const std::string& s) {
  if (s == "xxz") return Model::XXZ;
  if (s == "lmg") return Model::LMG;
  throw DomainError("unknown model '" + s + "' (expected xxz or lmg)");
}

std::string measures_to_string(const MeasureSelection& sel) {
  std::string out;
  auto add = [&out](char c) {
    if (!out.empty()) out += ',';
    out += c;
  };
  if (sel.negativity) add('N');
  if (sel.deficit) add('I');
  if (sel.tdd) add('D');
  if (sel.lqu) add('U');
  return out;
}

MeasureSelection measures_from_string(const std::string& s) {
  MeasureSelection sel{false, false, false, false};
  for (char c : s) {
    switch (c) {
      case 'N': sel.negativity = true; break;
      case 'I': sel.deficit = true; break;
      case 'D': sel.tdd = true; break;
      case 'U': sel.lqu = true; break;
      case ',': case ' ': break;
      default: throw DomainError(std::string("unknown measure '") + c + "' (expected N,I,D,U)");
    }
  }
  if (!sel.any()) throw DomainError("empty measure selection");
  return sel;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, const MeasureSelection& sel) {
  std::string out = "param,regime,N,I,D,U,dN,dI,dD,dU\n";
  auto cell = [&sel](const MeasureSet& m, char which) -> std::string {
    switch (which) {
      case 'N': return sel.negativity ? format_g12(m.negativity) : "";
      case 'I': return sel.deficit ? format_g12(m.deficit) : "";
      case 'D': return sel.tdd ? format_g12(m.tdd) : "";
      default: return sel.lqu ? format_g12(m.lqu) : "";
    }
  };
  for (const auto& rec : records) {
    out += format_g12(rec.param);
    out += ',';
    out += rec.regime;
    if (rec.ok) {
      for (char c : {'N', 'I', 'D', 'U'}) out += ',' + cell(rec.values, c);
      for (char c : {'N', 'I', 'D', 'U'}) out += ',' + cell(rec.derivatives, c);
    } else {
      for (int i = 0; i < 8; ++i) out += ",ERR";
    }
    out += '\n';
  }
  return out;
}

std::string manifest_json(const std::string& command, const SweepConfig& cfg) {
  ordered_json j;
  j["command"] = command;
  j["tool_version"] = SPINQCORR_VERSION;
  char stamp[64];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["timestamp"] = stamp;

  ordered_json c;
  c["model"] = model_name(cfg.model);
  c["r"] = cfg.r;
  c["param_min"] = cfg.param_min;
  c["param_max"] = cfg.param_max;
  c["step"] = cfg.step;
  c["derivative_step"] = cfg.dstep();
  c["measures"] = measures_to_string(cfg.measures);
  c["threads"] = cfg.threads;
  j["config"] = c;

  ordered_json tol;
  tol["quadrature_abs_tol"] = QuadratureSpec{}.abs_tol;
  tol["quadrature_rel_tol"] = QuadratureSpec{}.rel_tol;
  tol["closed_vs_definitional"] = 1e-7;
  tol["lmg_closed_vs_definitional"] = 1e-8;
  j["tolerances"] = tol;
  return j.dump(2) + "\n";
}

SweepConfig config_from_manifest(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  const auto& c = j.at("config");
  SweepConfig cfg;
  cfg.model = model_from_name(c.at("model").get<std::string>());
  cfg.r = c.at("r").get<int>();
  cfg.param_min = c.at("param_min").get<double>();
  cfg.param_max = c.at("param_max").get<double>();
  cfg.step = c.at("step").get<double>();
  cfg.derivative_step = c.at("derivative_step").get<double>();
  cfg.measures = measures_from_string(c.at("measures").get<std::string>());
  cfg.threads = c.value("threads", 0);
  cfg.validate();
  return cfg;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f.good()) throw Error("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("rename '" + tmp + "' -> '" + path + "' failed: " + ec.message());
}

}  // namespace spinqcorr
