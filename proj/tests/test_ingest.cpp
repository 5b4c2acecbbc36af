#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "gapot/error.hpp"
#include "gapot/ingest.hpp"
#include "gapot/power.hpp"
#include "oracles.hpp"

using namespace gapot;

namespace {

SpectralSignal field_spectrum(bool current) {
  SpectralSignal s;
  if (current) {
    s.harmonics = {{1, 2.33, -0.72}, {3, 0.93, 1.85}, {5, 0.45, -1.69}, {7, 0.49, 1.70}, {9, 0.16, -1.44}};
  } else {
    s.harmonics = {{1, 233.92, -1.57}, {3, 0.46, -2.61}, {5, 4.74, 1.28}, {7, 4.02, -0.07}, {9, 0.42, -2.60}};
  }
  return s;
}

// 3125 samples at 15.625 kHz: ten 50 Hz periods.
constexpr double kFs = 15625.0;
constexpr std::size_t kSamples = 3125;

void check_signal_close(const SpectralSignal& got, const SpectralSignal& want, double rms_tol, double phase_tol) {
  CHECK(std::abs(got.dc - want.dc) <= rms_tol);
  REQUIRE(got.harmonics.size() == want.harmonics.size());
  for (std::size_t k = 0; k < want.harmonics.size(); ++k) {
    CHECK(got.harmonics[k].order == want.harmonics[k].order);
    CHECK(std::abs(got.harmonics[k].rms - want.harmonics[k].rms) <= rms_tol);
    CHECK(oracle::phase_distance(got.harmonics[k].phase, want.harmonics[k].phase) <= phase_tol);
  }
}

}  // namespace

TEST_CASE("load_csv") {
  SUBCASE("well formed") {
    std::ostringstream os;
    os << "# fs_hz=15625\nu,i\n";
    for (std::size_t m = 0; m < kSamples; ++m) os << m << ',' << -static_cast<double>(m) << '\n';
    std::istringstream in(os.str());
    const auto w = load_csv(in);
    CHECK(w.u.samples.size() == kSamples);
    CHECK(w.i.samples.size() == kSamples);
    CHECK(w.u.sample_rate_hz == 15625.0);
    CHECK(w.u.duration_s() == doctest::Approx(0.2));
    CHECK(w.i.samples[10] == -10.0);
    CHECK(w.i.label == Quantity::current);
  }
  SUBCASE("header-less column names are optional, blank lines skipped") {
    std::istringstream in("# fs_hz = 1000\n\n1.5,2\n -3e-1 , +4 \r\n");
    const auto w = load_csv(in);
    REQUIRE(w.u.samples.size() == 2);
    CHECK(w.u.samples[1] == doctest::Approx(-0.3));
    CHECK(w.i.samples[1] == 4.0);
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](const std::string& text) {
      std::istringstream in(text);
      try {
        load_csv(in);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{9999};
    };
    CHECK_THROWS_AS([] { std::istringstream in(""); load_csv(in); }(), ParseError);
    CHECK(line_of("fs=10\n1,2\n") == 1);
    CHECK(line_of("# fs_hz=10\n1,2\n3\n") == 3);
    CHECK(line_of("# fs_hz=10\n1,2\n3,x\n") == 3);
    CHECK(line_of("# fs_hz=10\n1,2,3\n") == 2);
    CHECK(line_of("# fs_hz=-5\n1,2\n") == 1);
    CHECK_THROWS_AS([] { std::istringstream in("# fs_hz=10\n"); load_csv(in); }(), ParseError);
    CHECK_THROWS_AS(load_csv(std::filesystem::path("/nonexistent/file.csv")), ParseError);
  }
  SUBCASE("write_csv round trip") {
    WaveformPair w{{{1.25, -2.0, 3.0}, 800.0, Quantity::voltage}, {{0.5, 0.25, -1e-3}, 800.0, Quantity::current}};
    std::stringstream io;
    write_csv(io, w);
    const auto back = load_csv(io);
    CHECK(back.u.samples == w.u.samples);
    CHECK(back.i.samples == w.i.samples);
    CHECK(back.u.sample_rate_hz == 800.0);
  }
}

TEST_CASE("dft_extract") {
  SUBCASE("recovers a synthesized two-tone signal") {
    SpectralSignal s;
    s.fundamental_hz = 50.0;
    s.harmonics = {{1, 100, 0}, {3, 100, 0}};
    const auto w = synthesize(s, 50.0 * 64, 64 * 4, Quantity::voltage);
    check_signal_close(dft_extract(w, 50.0, 3), s, 1e-9, 1e-9);
  }
  SUBCASE("pure DC") {
    const SampledWaveform w{std::vector<double>(128, 5.0), 3200.0, Quantity::voltage};
    const auto s = dft_extract(w, 50.0, 5);
    CHECK(s.dc == doctest::Approx(5.0));
    CHECK(s.harmonics.empty());
  }
  SUBCASE("five-harmonic field spectrum") {
    for (bool current : {false, true}) {
      const auto s = field_spectrum(current);
      const auto w = synthesize(s, kFs, kSamples, current ? Quantity::current : Quantity::voltage);
      check_signal_close(dft_extract(w, 50.0, 9), s, 0.01, 0.01);
    }
  }
  SUBCASE("inter-harmonic on a bin") {
    SpectralSignal s;
    s.harmonics = {{1, 10, 0.3}};
    s.interharmonics = {{2.5, 1.5, -1.1}};
    const auto w = synthesize(s, 6400.0, 128 * 4, Quantity::voltage);
    const auto got = dft_extract(w, 50.0, 3, {2.5});
    REQUIRE(got.interharmonics.size() == 1);
    CHECK(got.interharmonics[0].rms == doctest::Approx(1.5));
    CHECK(got.interharmonics[0].phase == doctest::Approx(-1.1));
  }
  SUBCASE("errors") {
    const SampledWaveform w{std::vector<double>(100, 1.0), 3200.0, Quantity::voltage};
    CHECK_THROWS_AS(dft_extract(w, 50.0, 3), DomainError);  // 1.5625 periods
    const SampledWaveform one{std::vector<double>(64, 1.0), 3200.0, Quantity::voltage};
    CHECK_THROWS_AS(dft_extract(one, 50.0, 3), DomainError);  // a single period
    const SampledWaveform two{std::vector<double>(16, 1.0), 400.0, Quantity::voltage};
    CHECK_THROWS_AS(dft_extract(two, 50.0, 4), DomainError);  // order 4 at Nyquist
    const SampledWaveform ok{std::vector<double>(128, 1.0), 3200.0, Quantity::voltage};
    CHECK_THROWS_AS(dft_extract(ok, 50.0, 3, {2.25}), DomainError);  // off-bin
  }
}

TEST_CASE("rms") {
  SpectralSignal unit;
  unit.harmonics = {{1, 1, 0}};
  CHECK(rms(synthesize(unit, 3200.0, 128, Quantity::voltage)) == doctest::Approx(1.0));
  CHECK(rms(SampledWaveform{std::vector<double>(10, 5.0), 1.0, Quantity::voltage}) == doctest::Approx(5.0));
  // Parseval over the field voltage entries.
  double energy = 0.0;
  for (const auto& h : field_spectrum(false).harmonics) energy += h.rms * h.rms;
  const double v = rms(synthesize(field_spectrum(false), kFs, kSamples, Quantity::voltage));
  CHECK(v == doctest::Approx(std::sqrt(energy)).epsilon(1e-12));
  CHECK(std::abs(v - 234.0) < 0.1);
  CHECK_THROWS_AS(rms(SampledWaveform{{}, 1.0, Quantity::voltage}), DomainError);
}

TEST_CASE("thd") {
  SpectralSignal s;
  s.harmonics = {{1, 100, 0}};
  CHECK(thd(s) == 0.0);
  s.harmonics.push_back({5, 10, 0.4});
  CHECK(thd(s) == doctest::Approx(0.10));
  // Direct formula over the field voltage entries.
  const double expected = std::sqrt(0.46 * 0.46 + 4.74 * 4.74 + 4.02 * 4.02 + 0.42 * 0.42) / 233.92;
  CHECK(thd(field_spectrum(false)) == doctest::Approx(expected));
  CHECK(thd(field_spectrum(false)) == doctest::Approx(0.026703).epsilon(1e-4));
  SpectralSignal no_fundamental;
  no_fundamental.harmonics = {{3, 1, 0}};
  CHECK_THROWS_AS(thd(no_fundamental), DomainError);
}

TEST_CASE("active_power") {
  const auto u = synthesize(field_spectrum(false), kFs, kSamples, Quantity::voltage);
  const auto i = synthesize(field_spectrum(true), kFs, kSamples, Quantity::current);
  CHECK(active_power(u, i) == doctest::Approx(359.21).epsilon(0.01));

  SpectralSignal sine, cosine;
  sine.harmonics = {{1, 1, 0}};
  cosine.harmonics = {{1, 1, std::numbers::pi / 2}};
  CHECK(std::abs(active_power(synthesize(sine, 3200, 128, Quantity::voltage),
                              synthesize(cosine, 3200, 128, Quantity::current))) < 1e-12);
  CHECK(active_power(u, u) == doctest::Approx(rms(u) * rms(u)));
  CHECK_THROWS_AS(active_power(u, SampledWaveform{{1.0}, kFs, Quantity::current}), DimensionError);
}

TEST_CASE("pipeline invariants") {
  oracle::Rng rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 15);
    const SpectralSignal su = oracle::random_signal(rng, n, 50.0, rng.coin());
    const SpectralSignal si = oracle::random_signal(rng, n, 50.0, rng.coin());
    const std::size_t count = 64 * static_cast<std::size_t>(rng.integer(2, 6));
    const auto u = synthesize(su, 3200.0, count, Quantity::voltage);
    const auto i = synthesize(si, 3200.0, count, Quantity::current);

    // Parseval on samples.
    double energy = su.dc * su.dc;
    for (const auto& h : su.harmonics) energy += h.rms * h.rms;
    REQUIRE(rms(u) * rms(u) == doctest::Approx(energy).epsilon(1e-9));

    const BasisLayout layout(n);
    const auto eu = dft_extract(u, 50.0, n);
    const auto ei = dft_extract(i, 50.0, n);
    const auto pu = to_phasor(eu, layout), pi = to_phasor(ei, layout);
    REQUIRE(std::abs(active_power(u, i) - geometric_power(pu, pi).active()) < 1e-6);

    // Delay both waveforms by whole samples (circular shift keeps integer periods).
    const std::size_t shift = static_cast<std::size_t>(rng.integer(1, 63));
    auto delayed = [&](const SampledWaveform& w) {
      SampledWaveform d = w;
      std::rotate(d.samples.begin(), d.samples.begin() + static_cast<std::ptrdiff_t>(shift), d.samples.end());
      return d;
    };
    const auto du = to_phasor(dft_extract(delayed(u), 50.0, n), layout);
    const auto di = to_phasor(dft_extract(delayed(i), 50.0, n), layout);
    const auto a = harmonic_pq(pu, pi), b = harmonic_pq(du, di);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      REQUIRE(std::abs(a[k].p - b[k].p) < 1e-9);
      REQUIRE(std::abs(std::abs(a[k].q) - std::abs(b[k].q)) < 1e-9);
    }
    REQUIRE(std::abs(norm(pu) - norm(du)) < 1e-9);
    REQUIRE(std::abs(norm(pi) - norm(di)) < 1e-9);
  }
}
