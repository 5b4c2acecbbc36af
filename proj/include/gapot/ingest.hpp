#pragma once

// Measurement front end: sampled voltage/current pairs to spectral signals.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gapot/phasor.hpp"

namespace gapot {

enum class Quantity { voltage, current };

struct SampledWaveform {
  std::vector<double> samples;
  double sample_rate_hz = 0.0;
  Quantity label = Quantity::voltage;

  double duration_s() const { return static_cast<double>(samples.size()) / sample_rate_hz; }
};

struct WaveformPair {
  SampledWaveform u;
  SampledWaveform i;
};

// Format:
//   # fs_hz=<rate>
//   [u,i]            optional column header
//   <u>,<i>          one row per sample
// Blank lines are ignored. Errors raise ParseError carrying the line number.
WaveformPair load_csv(std::istream& in);
WaveformPair load_csv(const std::filesystem::path& path);

void write_csv(std::ostream& out, const WaveformPair& w);

// Rectangular-window DFT over an integer number (>= 2) of fundamental periods.
// Phases are referenced to sin(k w t) at the first sample, so the result feeds
// to_phasor directly. Components with negligible rms are dropped.
SpectralSignal dft_extract(const SampledWaveform& w, double fundamental_hz, int max_order,
                           const std::vector<double>& interharmonic_orders = {});

double rms(const SampledWaveform& w);

// sqrt(sum_{k>=2} X_k^2) / X_1 over integer harmonics.
double thd(const SpectralSignal& s);

double active_power(const SampledWaveform& u, const SampledWaveform& i);

// Samples of a spectral signal at the given rate.
SampledWaveform synthesize(const SpectralSignal& s, double sample_rate_hz, std::size_t count, Quantity label);

}  // namespace gapot
