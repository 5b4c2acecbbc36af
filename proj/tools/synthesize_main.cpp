// Writes a waveform CSV (the analyze input format) sampled from a voltage and a
// current SpectralSignal JSON.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gapot/error.hpp"
#include "gapot/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthesize a u,i waveform CSV from two spectral signals", "gapot-synth"};
  std::string voltage_path, current_path, out_path;
  double fs = 15625.0;
  std::size_t samples = 3125;
  app.add_option("--voltage", voltage_path, "Voltage SpectralSignal JSON")->required();
  app.add_option("--current", current_path, "Current SpectralSignal JSON")->required();
  app.add_option("--fs", fs, "Sample rate in Hz")->check(CLI::PositiveNumber);
  app.add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Output CSV (stdout when omitted)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto u = gapot::spectral_signal_from_json(gapot::read_json_file(voltage_path));
    const auto i = gapot::spectral_signal_from_json(gapot::read_json_file(current_path));
    const gapot::WaveformPair w{gapot::synthesize(u, fs, samples, gapot::Quantity::voltage),
                                gapot::synthesize(i, fs, samples, gapot::Quantity::current)};
    if (out_path.empty()) {
      gapot::write_csv(std::cout, w);
    } else {
      std::ofstream out(out_path);
      if (!out) throw gapot::ParseError("cannot write '" + out_path + "'");
      gapot::write_csv(out, w);
    }
  } catch (const gapot::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gapot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
