#pragma once

// Command implementations behind the gapot executable.
//
//   solve     --circuit <json> --source <json>
//   analyze   --input <csv> --fundamental <hz> --orders <n> [--interharmonics ...] [--plot <csv>]
//   decompose --voltage <json> --current <json>
//   global:   --format json|csv|table  --out <path>
//
// Exit codes: 0 success, 1 computation error, 2 usage or I/O error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gapot/report.hpp"

namespace gapot::cli {

enum class Format { json, csv, table };

struct AnalysisConfig {
  double fundamental_hz = 50.0;
  int max_order = 1;
  std::vector<double> interharmonic_orders;
  Format format = Format::json;
  std::string out_path;  // empty: standard output
};

struct SolveResult {
  SpectralSignal source;
  GeometricPhasor u, i;
  std::vector<HarmonicAdmittance> admittances;
  PowerReport power;
  CurrentComponents currents;
};

struct AnalyzeResult {
  SpectralSignal voltage, current;
  double rms_u = 0.0, rms_i = 0.0, p_samples_w = 0.0;
  std::optional<double> thd_u, thd_i;
  GeometricPhasor u, i;
  PowerReport power;
  CurrentComponents currents;
};

struct DecomposeResult {
  GeometricPhasor u, i;
  PowerReport power;
  CurrentComponents currents;
};

SolveResult solve(const SeriesRLC& net, const SpectralSignal& source);
AnalyzeResult analyze(const WaveformPair& w, const AnalysisConfig& config);
DecomposeResult decompose(const SpectralSignal& voltage, const SpectralSignal& current);

void write(std::ostream& out, const SolveResult& r, Format f);
void write(std::ostream& out, const AnalyzeResult& r, Format f);
void write(std::ostream& out, const DecomposeResult& r, Format f);

json to_json(const SolveResult& r);
json to_json(const AnalyzeResult& r);
json to_json(const DecomposeResult& r);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gapot::cli
