#pragma once

// Data-parallel sample kernels. The default implementations use OpenMP when the
// library is built with it; kernels::serial holds the single-threaded reference
// versions the tests compare against.

#include <cstddef>
#include <span>
#include <vector>

namespace gapot::kernels {

// One sinusoid of a synthesized waveform: sqrt(2) * rms * sin(omega * t + phase).
struct Tone {
  double omega = 0.0;  // rad/s
  double rms = 0.0;
  double phase = 0.0;
};

// Correlation of samples with one integer DFT bin:
//   cos_sum = sum_m x[m] cos(2 pi bin m / N),  sin_sum = sum_m x[m] sin(2 pi bin m / N)
struct BinSums {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

std::vector<BinSums> dft_bins(std::span<const double> samples, std::span<const std::size_t> bins);
std::vector<double> synthesize(double dc, std::span<const Tone> tones, std::span<const double> times);
double mean_product(std::span<const double> a, std::span<const double> b);

// Worker count the parallel kernels run with (1 without OpenMP).
int max_threads();

namespace serial {
std::vector<BinSums> dft_bins(std::span<const double> samples, std::span<const std::size_t> bins);
std::vector<double> synthesize(double dc, std::span<const Tone> tones, std::span<const double> times);
double mean_product(std::span<const double> a, std::span<const double> b);
}  // namespace serial

}  // namespace gapot::kernels
