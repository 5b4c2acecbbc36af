#pragma once

// File formats shared by the CLI and the fixtures: SpectralSignal and circuit
// JSON, the PowerReport JSON, the decomposition CSV, plot series and text tables.
// All emitted numbers carry 6 significant digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gapot/circuit.hpp"
#include "gapot/decompose.hpp"
#include "gapot/ingest.hpp"
#include "gapot/phasor.hpp"
#include "gapot/power.hpp"

namespace gapot {

using json = nlohmann::json;

// Rounds to 6 significant digits; -0 becomes 0.
double round6(double v);
// printf("%.6g") with -0 normalized.
std::string fmt6(double v);

json to_json(const SpectralSignal& s);
// Throws ParseError naming the offending field.
SpectralSignal spectral_signal_from_json(const json& j);
SeriesRLC circuit_from_json(const json& j);
json read_json_file(const std::string& path);

struct PowerReport {
  double p_w = 0.0;
  double apparent_va = 0.0;
  std::optional<double> pf;
  std::vector<HarmonicPQ> per_harmonic;
  std::vector<CrossTerm> cross_terms;
  GeometricPower m;
};

PowerReport make_power_report(const GeometricPhasor& u, const GeometricPhasor& i);
json to_json(const PowerReport& r);

json to_json(const CurrentComponents& c);
json to_json(const std::vector<CompensationSusceptance>& b);

// Header basis,i_p,i_a,i_s,i_q,i_G,i_N,i; one row per basis index; final row "norm".
void write_decomposition_csv(std::ostream& out, const CurrentComponents& c);

// Columns t,u,i,p,i_a,i_N: measured samples, instantaneous power and the
// time-domain active / non-active currents rebuilt from their phasors.
void write_plot_csv(std::ostream& out, const WaveformPair& w, const CurrentComponents& c, double fundamental_hz);

void write_spectrum_table(std::ostream& out, const SpectralSignal& u, const SpectralSignal& i);
void write_pq_table(std::ostream& out, const PowerReport& r);
void write_current_table(std::ostream& out, const CurrentComponents& c);

}  // namespace gapot
