#pragma once

// Frequency-domain signals and their geometric phasors.
//
// A periodic signal
//   x(t) = U0 + sqrt(2) * sum_k X_k sin(k w t + phi_k)
// maps to the grade-1 multivector
//   U0 s0 + sum_k (X_k sin(phi_k) s(2k-1) + X_k cos(phi_k) s(2k)).
// Inter-harmonics take the slot pairs after the last integer harmonic.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gapot/multivector.hpp"

namespace gapot {

struct HarmonicComponent {
  double order = 1.0;  // multiple of the fundamental
  double rms = 0.0;
  double phase = 0.0;  // radians, (-pi, pi]
};

struct SpectralSignal {
  double fundamental_hz = 50.0;
  double dc = 0.0;
  std::vector<HarmonicComponent> harmonics;       // integer orders, strictly increasing
  std::vector<HarmonicComponent> interharmonics;  // non-integer orders, strictly increasing

  double omega() const;
  // Throws DomainError on a broken invariant.
  void validate() const;
};

// Wraps a phase into (-pi, pi].
double normalize_phase(double phase);

class BasisLayout {
 public:
  BasisLayout() = default;
  BasisLayout(int max_order, std::vector<double> interharmonic_orders = {});

  // Smallest layout with a slot for every order present in the signals.
  static BasisLayout covering(std::span<const SpectralSignal> signals);

  int max_order() const noexcept { return max_order_; }
  const std::vector<double>& interharmonic_orders() const noexcept { return interharmonic_orders_; }
  std::size_t dimension() const noexcept { return 1 + 2 * static_cast<std::size_t>(max_order_) + 2 * interharmonic_orders_.size(); }

  // Slot pair (sin index, cos index) for an order, if the layout has one.
  std::optional<std::pair<std::size_t, std::size_t>> slots(double order) const;
  // Unit bivector of the plane carrying an order.
  Blade plane(double order) const;
  // Order stored at a slot pair index (1-based pair number p covers indices 2p-1, 2p).
  double order_of_pair(std::size_t pair) const;
  std::size_t pair_count() const noexcept { return static_cast<std::size_t>(max_order_) + interharmonic_orders_.size(); }

  friend bool operator==(const BasisLayout&, const BasisLayout&) = default;

 private:
  int max_order_ = 0;
  std::vector<double> interharmonic_orders_;
};

struct GeometricPhasor {
  Multivector mv;
  BasisLayout layout;

  GeometricPhasor(Multivector m, BasisLayout l);
  explicit GeometricPhasor(const BasisLayout& l) : GeometricPhasor(Multivector(l.dimension()), l) {}

  // Component in one plane (or the DC slot for pair 0) as a standalone phasor.
  GeometricPhasor pair_part(std::size_t pair) const;
  double dc() const { return mv.coefficient(Blade::basis(0)); }

  friend GeometricPhasor operator+(const GeometricPhasor& a, const GeometricPhasor& b);
  friend GeometricPhasor operator-(const GeometricPhasor& a, const GeometricPhasor& b);
  friend GeometricPhasor operator*(double s, const GeometricPhasor& a);
};

double norm(const GeometricPhasor& p);
double inner_vectors(const GeometricPhasor& a, const GeometricPhasor& b);
void require_same_layout(const GeometricPhasor& a, const GeometricPhasor& b, const char* op);

GeometricPhasor to_phasor(const SpectralSignal& s, const BasisLayout& layout);
SpectralSignal from_phasor(const GeometricPhasor& p, double fundamental_hz = 50.0);

// x(t) at each requested time.
std::vector<double> reconstruct(const SpectralSignal& s, std::span<const double> times);

// Uniform sample instants i / sample_rate_hz, i = 0 .. count-1.
std::vector<double> sample_times(std::size_t count, double sample_rate_hz);

}  // namespace gapot
