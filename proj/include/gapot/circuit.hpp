#pragma once

// Frequency-domain solution of single-phase linear loads. Each harmonic has a
// spinor impedance Z_k = R + X_k B_k in its own plane B_k = s(2k-1)(2k), and
// Ohm's law i_k = Y_k u_k with Y_k = Z_k^-1.

#include <optional>
#include <vector>

#include "gapot/multivector.hpp"
#include "gapot/phasor.hpp"

namespace gapot {

struct SeriesRLC {
  double r = 0.0;                // ohm
  double l = 0.0;                // henry
  std::optional<double> c;       // farad; absent means no capacitor

  void validate() const;
};

struct HarmonicImpedance {
  double order = 1.0;
  double resistance = 0.0;
  double reactance = 0.0;  // inductive positive
  Blade plane;             // empty for DC

  Multivector as_multivector(std::size_t dimension) const;
};

struct HarmonicAdmittance {
  double order = 1.0;
  double conductance = 0.0;
  double susceptance = 0.0;
  Blade plane;

  Multivector as_multivector(std::size_t dimension) const;
};

// Order 0 is DC: capacitor blocks it (DomainError), inductor is a short.
HarmonicImpedance impedance_at(const SeriesRLC& net, double order, double omega, const BasisLayout& layout);
// Integer harmonic convenience; plane s(2k-1)(2k).
HarmonicImpedance impedance_at(const SeriesRLC& net, int k, double omega);

HarmonicAdmittance admittance_at(const HarmonicImpedance& z);

// Admittance for every occupied slot pair of u.
std::vector<HarmonicAdmittance> admittances_for(const GeometricPhasor& u, const SeriesRLC& net, double omega);

// i_k = Y_k u_k for each occupied slot pair. Throws if an occupied pair has no admittance.
GeometricPhasor apply_admittances(const GeometricPhasor& u, const std::vector<HarmonicAdmittance>& y);

GeometricPhasor solve_current(const GeometricPhasor& u, const SeriesRLC& net, double omega);

// d/dt and integral over t, plane by plane: left product with k w B_k, resp. -B_k/(k w).
GeometricPhasor derivative_phasor(const GeometricPhasor& p, double omega);
GeometricPhasor integral_phasor(const GeometricPhasor& p, double omega);

}  // namespace gapot
