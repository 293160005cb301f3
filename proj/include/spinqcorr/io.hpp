#pragma once

#include <string>
#include <vector>

#include "spinqcorr/sweep.hpp"

namespace spinqcorr {

/// CSV rows: param,regime,N,I,D,U,dN,dI,dD,dU with 12 significant digits.
/// Unselected measures leave empty cells; failed points carry ERR markers.
std::string sweep_csv(const std::vector<SweepRecord>& records, const MeasureSelection& sel);

/// JSON run manifest: command, config, tool version, timestamp, tolerances.
/// Everything except the timestamp round-trips bit-identically.
std::string manifest_json(const std::string& command, const SweepConfig& cfg);

/// Rebuilds a sweep config from a manifest produced by manifest_json.
SweepConfig config_from_manifest(const std::string& json_text);

/// Writes atomically (temp file + rename). Throws Error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string model_name(Model m);
Model model_from_name(const std::string& s);
std::string measures_to_string(const MeasureSelection& sel);
MeasureSelection measures_from_string(const std::string& s);

/// printf-style %.12g formatting used for every number we emit.
std::string format_g12(double v);

}  // namespace spinqcorr
