#include "gapot/kernels.hpp"

#include "gapot/error.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gapot::kernels {

namespace {

// Exact phase index: angle = 2 pi ((bin * m) mod N) / N keeps the argument small.
inline double bin_angle(std::size_t bin, std::size_t m, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>((bin * m) % n) / static_cast<double>(n);
}

void require_equal_length(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("mean_product: length mismatch");
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<BinSums> dft_bins(std::span<const double> samples, std::span<const std::size_t> bins) {
  const std::size_t n = samples.size();
  const auto count = static_cast<std::ptrdiff_t>(n);
  std::vector<BinSums> out(bins.size());
  for (std::size_t b = 0; b < bins.size(); ++b) {
    const std::size_t bin = bins[b] % (n == 0 ? 1 : n);
    double c = 0.0, s = 0.0;
#pragma omp parallel for reduction(+ : c, s) schedule(static)
    for (std::ptrdiff_t m = 0; m < count; ++m) {
      const double angle = bin_angle(bin, static_cast<std::size_t>(m), n);
      c += samples[static_cast<std::size_t>(m)] * std::cos(angle);
      s += samples[static_cast<std::size_t>(m)] * std::sin(angle);
    }
    out[b] = {c, s};
  }
  return out;
}

std::vector<double> synthesize(double dc, std::span<const Tone> tones, std::span<const double> times) {
  std::vector<double> out(times.size());
  const auto count = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t m = 0; m < count; ++m) {
    const double t = times[static_cast<std::size_t>(m)];
    double x = dc;
    for (const Tone& tone : tones) x += std::numbers::sqrt2 * tone.rms * std::sin(tone.omega * t + tone.phase);
    out[static_cast<std::size_t>(m)] = x;
  }
  return out;
}

double mean_product(std::span<const double> a, std::span<const double> b) {
  require_equal_length(a, b);
  if (a.empty()) return 0.0;
  const auto count = static_cast<std::ptrdiff_t>(a.size());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::ptrdiff_t m = 0; m < count; ++m) sum += a[static_cast<std::size_t>(m)] * b[static_cast<std::size_t>(m)];
  return sum / static_cast<double>(a.size());
}

namespace serial {

std::vector<BinSums> dft_bins(std::span<const double> samples, std::span<const std::size_t> bins) {
  const std::size_t n = samples.size();
  std::vector<BinSums> out;
  out.reserve(bins.size());
  for (std::size_t bin : bins) {
    BinSums acc;
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = bin_angle(bin % n, m, n);
      acc.cos_sum += samples[m] * std::cos(angle);
      acc.sin_sum += samples[m] * std::sin(angle);
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<double> synthesize(double dc, std::span<const Tone> tones, std::span<const double> times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    double x = dc;
    for (const Tone& tone : tones) x += std::numbers::sqrt2 * tone.rms * std::sin(tone.omega * t + tone.phase);
    out.push_back(x);
  }
  return out;
}

double mean_product(std::span<const double> a, std::span<const double> b) {
  require_equal_length(a, b);
  if (a.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) sum += a[m] * b[m];
  return sum / static_cast<double>(a.size());
}

}  // namespace serial

}  // namespace gapot::kernels
