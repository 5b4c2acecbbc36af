#include "gapot/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gapot/error.hpp"

namespace gapot::cli {

namespace {

constexpr const char* kNoPhysicalMeaning = "computed for completeness; carries no physical power meaning";

json power_extras(const GeometricPhasor& u, const CurrentComponents& c) {
  return {{"scattered_power", {{"multivector", scattered_power(u, c).mv.to_string()}, {"note", kNoPhysicalMeaning}}},
          {"quadrature_power", {{"multivector", quadrature_power(u, c).mv.to_string()}, {"note", kNoPhysicalMeaning}}}};
}

json optional_number(const std::optional<double>& v) { return v ? json(round6(*v)) : json(nullptr); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

SolveResult solve(const SeriesRLC& net, const SpectralSignal& source) {
  source.validate();
  const SpectralSignal signals[] = {source};
  const BasisLayout layout = BasisLayout::covering(signals);
  GeometricPhasor u = to_phasor(source, layout);
  auto y = admittances_for(u, net, source.omega());
  GeometricPhasor i = apply_admittances(u, y);
  PowerReport power = make_power_report(u, i);
  CurrentComponents currents = gapot::decompose(u, i, y);
  return {source, std::move(u), std::move(i), std::move(y), std::move(power), std::move(currents)};
}

AnalyzeResult analyze(const WaveformPair& w, const AnalysisConfig& config) {
  if (config.max_order < 1) throw DomainError("analyze: --orders must be >= 1");
  if (w.u.samples.size() != w.i.samples.size()) throw DimensionError("analyze: u and i lengths differ");
  const BasisLayout layout(config.max_order, config.interharmonic_orders);
  SpectralSignal voltage = dft_extract(w.u, config.fundamental_hz, config.max_order, config.interharmonic_orders);
  SpectralSignal current = dft_extract(w.i, config.fundamental_hz, config.max_order, config.interharmonic_orders);
  GeometricPhasor u = to_phasor(voltage, layout);
  GeometricPhasor i = to_phasor(current, layout);

  auto try_thd = [](const SpectralSignal& s) -> std::optional<double> {
    try {
      return thd(s);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  AnalyzeResult r{voltage, current, rms(w.u), rms(w.i), active_power(w.u, w.i), try_thd(voltage), try_thd(current),
                  u, i, make_power_report(u, i), gapot::decompose(u, i)};
  return r;
}

DecomposeResult decompose(const SpectralSignal& voltage, const SpectralSignal& current) {
  voltage.validate();
  current.validate();
  if (std::abs(voltage.fundamental_hz - current.fundamental_hz) > 1e-9 * voltage.fundamental_hz) {
    throw ParseError("voltage and current fundamentals differ");
  }
  const SpectralSignal signals[] = {voltage, current};
  const BasisLayout layout = BasisLayout::covering(signals);
  GeometricPhasor u = to_phasor(voltage, layout);
  GeometricPhasor i = to_phasor(current, layout);
  return {u, i, make_power_report(u, i), gapot::decompose(u, i)};
}

json to_json(const SolveResult& r) {
  json j{{"command", "solve"},
         {"source", gapot::to_json(r.source)},
         {"voltage_phasor", r.u.mv.to_string()},
         {"current_phasor", r.i.mv.to_string()},
         {"current", gapot::to_json(from_phasor(r.i, r.source.fundamental_hz))},
         {"power", gapot::to_json(r.power)},
         {"currents", gapot::to_json(r.currents)},
         {"compensation", gapot::to_json(compensation_susceptances(r.admittances))}};
  j.update(power_extras(r.u, r.currents));
  return j;
}

json to_json(const AnalyzeResult& r) {
  json j{{"command", "analyze"},
         {"voltage", gapot::to_json(r.voltage)},
         {"current", gapot::to_json(r.current)},
         {"measurements",
          {{"rms_u_v", round6(r.rms_u)},
           {"rms_i_a", round6(r.rms_i)},
           {"thd_u", optional_number(r.thd_u)},
           {"thd_i", optional_number(r.thd_i)},
           {"p_samples_w", round6(r.p_samples_w)}}},
         {"power", gapot::to_json(r.power)},
         {"currents", gapot::to_json(r.currents)},
         {"compensation", gapot::to_json(compensation_susceptances(estimate_admittances(r.u, r.i)))}};
  j.update(power_extras(r.u, r.currents));
  return j;
}

json to_json(const DecomposeResult& r) {
  json j{{"command", "decompose"}, {"power", gapot::to_json(r.power)}, {"currents", gapot::to_json(r.currents)}};
  j.update(power_extras(r.u, r.currents));
  return j;
}

void write(std::ostream& out, const SolveResult& r, Format f) {
  switch (f) {
    case Format::json:
      emit(out, to_json(r));
      break;
    case Format::csv:
      write_decomposition_csv(out, r.currents);
      break;
    case Format::table:
      out << "u = " << r.u.mv.to_string() << "\ni = " << r.i.mv.to_string() << "\n\n";
      write_pq_table(out, r.power);
      out << '\n';
      write_current_table(out, r.currents);
      break;
  }
}

void write(std::ostream& out, const AnalyzeResult& r, Format f) {
  switch (f) {
    case Format::json:
      emit(out, to_json(r));
      break;
    case Format::csv:
      write_decomposition_csv(out, r.currents);
      break;
    case Format::table:
      out << "rms u = " << fmt6(r.rms_u) << " V, rms i = " << fmt6(r.rms_i) << " A, P (samples) = "
          << fmt6(r.p_samples_w) << " W\n";
      out << "thd u = " << (r.thd_u ? fmt6(*r.thd_u) : "n/a") << ", thd i = " << (r.thd_i ? fmt6(*r.thd_i) : "n/a")
          << "\n\n";
      write_spectrum_table(out, r.voltage, r.current);
      out << '\n';
      write_pq_table(out, r.power);
      out << '\n';
      write_current_table(out, r.currents);
      break;
  }
}

void write(std::ostream& out, const DecomposeResult& r, Format f) {
  switch (f) {
    case Format::json:
      emit(out, to_json(r));
      break;
    case Format::csv:
      write_decomposition_csv(out, r.currents);
      break;
    case Format::table:
      write_pq_table(out, r.power);
      out << '\n';
      write_current_table(out, r.currents);
      break;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric-algebra power analysis for single-phase non-sinusoidal circuits", "gapot"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string out_path;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  app.add_option("--format", format_name, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}).description(""))
      ->type_name("json|csv|table");
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.fallthrough();

  std::string circuit_path, source_path;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a series RLC load fed by a spectral source");
  solve_cmd->add_option("--circuit", circuit_path, "Circuit JSON {r_ohm, l_henry, c_farad}")->required();
  solve_cmd->add_option("--source", source_path, "Source SpectralSignal JSON")->required();

  AnalysisConfig config;
  std::string input_path, plot_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze sampled voltage/current waveforms");
  analyze_cmd->add_option("--input", input_path, "Waveform CSV ('# fs_hz=<rate>' then u,i rows)")->required();
  analyze_cmd->add_option("--fundamental", config.fundamental_hz, "Fundamental frequency in Hz")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--orders", config.max_order, "Highest harmonic order")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--interharmonics", config.interharmonic_orders, "Non-integer orders to extract");
  analyze_cmd->add_option("--plot", plot_path, "Write plot series CSV (t,u,i,p,i_a,i_N)");

  std::string voltage_path, current_path;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a current given voltage and current spectra");
  decompose_cmd->add_option("--voltage", voltage_path, "Voltage SpectralSignal JSON")->required();
  decompose_cmd->add_option("--current", current_path, "Current SpectralSignal JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Format format = formats.at(format_name);
  std::ostringstream buffer;
  try {
    if (solve_cmd->parsed()) {
      const SeriesRLC net = circuit_from_json(read_json_file(circuit_path));
      const SpectralSignal source = spectral_signal_from_json(read_json_file(source_path));
      write(buffer, solve(net, source), format);
    } else if (analyze_cmd->parsed()) {
      config.format = format;
      config.out_path = out_path;
      const WaveformPair w = load_csv(std::filesystem::path(input_path));
      const AnalyzeResult r = analyze(w, config);
      write(buffer, r, format);
      if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw ParseError("cannot write '" + plot_path + "'");
        write_plot_csv(plot, w, r.currents, config.fundamental_hz);
      }
    } else {
      const SpectralSignal voltage = spectral_signal_from_json(read_json_file(voltage_path));
      const SpectralSignal current = spectral_signal_from_json(read_json_file(current_path));
      write(buffer, decompose(voltage, current), format);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return 0;
}

}  // namespace gapot::cli
