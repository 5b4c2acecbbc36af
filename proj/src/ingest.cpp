#include "gapot/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <string_view>

#include "gapot/error.hpp"
#include "gapot/kernels.hpp"

namespace gapot {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(std::string("non-numeric ") + what + " '" + std::string(field) + "'", line);
  }
  return value;
}

double parse_header(std::string_view line, std::size_t line_no) {
  line = trim(line);
  if (line.empty() || line.front() != '#') throw ParseError("expected header '# fs_hz=<rate>'", line_no);
  line.remove_prefix(1);
  line = trim(line);
  constexpr std::string_view key = "fs_hz";
  if (line.substr(0, key.size()) != key) throw ParseError("expected header '# fs_hz=<rate>'", line_no);
  line = trim(line.substr(key.size()));
  if (line.empty() || line.front() != '=') throw ParseError("expected header '# fs_hz=<rate>'", line_no);
  const double fs = parse_number(line.substr(1), line_no, "sample rate");
  if (fs <= 0.0) throw ParseError("sample rate must be > 0", line_no);
  return fs;
}

// Magnitudes below this fraction of the waveform peak are rounding noise.
constexpr double kRelativeFloor = 1e-10;

}  // namespace

WaveformPair load_csv(std::istream& in) {
  WaveformPair out;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool column_header_allowed = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!have_header) {
      const double fs = parse_header(line, line_no);
      out.u = {{}, fs, Quantity::voltage};
      out.i = {{}, fs, Quantity::current};
      have_header = true;
      column_header_allowed = true;
      continue;
    }
    if (column_header_allowed && (line == "u,i" || line == "u, i")) {
      column_header_allowed = false;
      continue;
    }
    column_header_allowed = false;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 2 columns 'u,i' (current column missing)", line_no);
    const std::string_view rest = line.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos) throw ParseError("expected 2 columns 'u,i', found more", line_no);
    out.u.samples.push_back(parse_number(line.substr(0, comma), line_no, "voltage"));
    out.i.samples.push_back(parse_number(rest, line_no, "current"));
  }
  if (!have_header) throw ParseError("empty input: missing '# fs_hz=<rate>' header", line_no);
  if (out.u.samples.empty()) throw ParseError("no samples after header", line_no);
  return out;
}

WaveformPair load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return load_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_csv(std::ostream& out, const WaveformPair& w) {
  if (w.u.samples.size() != w.i.samples.size()) throw DimensionError("write_csv: u and i lengths differ");
  out << "# fs_hz=" << std::setprecision(17) << w.u.sample_rate_hz << "\nu,i\n";
  for (std::size_t m = 0; m < w.u.samples.size(); ++m) out << w.u.samples[m] << ',' << w.i.samples[m] << '\n';
}

SpectralSignal dft_extract(const SampledWaveform& w, double fundamental_hz, int max_order,
                           const std::vector<double>& interharmonic_orders) {
  if (!(fundamental_hz > 0.0) || !(w.sample_rate_hz > 0.0)) throw DomainError("dft_extract: rates must be > 0");
  if (max_order < 0) throw DomainError("dft_extract: max order must be >= 0");
  const std::size_t n = w.samples.size();
  const double periods = static_cast<double>(n) * fundamental_hz / w.sample_rate_hz;
  const double whole = std::round(periods);
  if (std::abs(periods - whole) > 1e-6 * std::max(1.0, periods)) {
    throw DomainError("dft_extract: window spans " + std::to_string(periods) +
                      " fundamental periods; an integer number is required");
  }
  if (whole < 2.0) throw DomainError("dft_extract: window must span at least 2 fundamental periods");
  const auto p = static_cast<std::size_t>(whole);

  std::vector<double> orders;
  std::vector<std::size_t> bins{0};
  auto add_bin = [&](double order) {
    const double bin = order * static_cast<double>(p);
    if (std::abs(bin - std::round(bin)) > 1e-6) {
      throw DomainError("dft_extract: order " + std::to_string(order) + " does not fall on a DFT bin");
    }
    const auto b = static_cast<std::size_t>(std::llround(bin));
    if (2 * b >= n) throw DomainError("dft_extract: order " + std::to_string(order) + " at or above Nyquist");
    orders.push_back(order);
    bins.push_back(b);
  };
  for (int k = 1; k <= max_order; ++k) add_bin(k);
  for (double o : interharmonic_orders) add_bin(o);

  const auto sums = kernels::dft_bins(w.samples, bins);
  double peak = 0.0;
  for (double x : w.samples) peak = std::max(peak, std::abs(x));
  const double floor = kRelativeFloor * std::max(1.0, peak);
  const double scale = std::numbers::sqrt2 / static_cast<double>(n);

  SpectralSignal s;
  s.fundamental_hz = fundamental_hz;
  s.dc = sums[0].cos_sum / static_cast<double>(n);
  if (std::abs(s.dc) < floor) s.dc = 0.0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const double a = scale * sums[j + 1].cos_sum;
    const double b = scale * sums[j + 1].sin_sum;
    const double magnitude = std::hypot(a, b);
    if (magnitude < floor) continue;
    HarmonicComponent c{orders[j], magnitude, normalize_phase(std::atan2(a, b))};
    (j < static_cast<std::size_t>(max_order) ? s.harmonics : s.interharmonics).push_back(c);
  }
  std::sort(s.interharmonics.begin(), s.interharmonics.end(),
            [](const auto& x, const auto& y) { return x.order < y.order; });
  return s;
}

double rms(const SampledWaveform& w) {
  if (w.samples.empty()) throw DomainError("rms of an empty waveform");
  return std::sqrt(kernels::mean_product(w.samples, w.samples));
}

double thd(const SpectralSignal& s) {
  double fundamental = 0.0, distortion = 0.0;
  for (const auto& h : s.harmonics) {
    if (std::abs(h.order - 1.0) < 1e-9) {
      fundamental = h.rms;
    } else if (h.order > 1.0) {
      distortion += h.rms * h.rms;
    }
  }
  if (fundamental <= 0.0) throw DomainError("thd: fundamental component missing");
  return std::sqrt(distortion) / fundamental;
}

double active_power(const SampledWaveform& u, const SampledWaveform& i) {
  if (u.samples.size() != i.samples.size()) throw DimensionError("active_power: waveform lengths differ");
  if (u.samples.empty()) throw DomainError("active_power of empty waveforms");
  return kernels::mean_product(u.samples, i.samples);
}

SampledWaveform synthesize(const SpectralSignal& s, double sample_rate_hz, std::size_t count, Quantity label) {
  if (!(sample_rate_hz > 0.0)) throw DomainError("synthesize: sample rate must be > 0");
  return {reconstruct(s, sample_times(count, sample_rate_hz)), sample_rate_hz, label};
}

}  // namespace gapot
