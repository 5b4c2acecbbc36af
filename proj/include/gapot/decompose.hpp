#pragma once

// Load current decomposition.
//
//   i = i_a + i_N             (Fryze split: i_a is the minimum-norm current carrying P)
//   i = i_p + i_q + i_G       (per-harmonic conductance / susceptance / generated parts)
//   i_N = i_s + i_q + i_G     (i_s = i_p - i_a, the scattered current)

#include <utility>
#include <vector>

#include "gapot/circuit.hpp"
#include "gapot/phasor.hpp"
#include "gapot/power.hpp"

namespace gapot {

struct CurrentNorms {
  double i = 0.0, i_a = 0.0, i_N = 0.0, i_p = 0.0, i_q = 0.0, i_s = 0.0, i_G = 0.0;
};

struct CurrentComponents {
  GeometricPhasor i, i_a, i_N, i_p, i_q, i_s, i_G;

  CurrentNorms norms() const;
};

struct CompensationSusceptance {
  double order = 1.0;
  double siemens = 0.0;
};

// (i_a, i_N) with i_a = (P / |u|^2) u.
std::pair<GeometricPhasor, GeometricPhasor> fryze_split(const GeometricPhasor& u, const GeometricPhasor& i);

// (i_p, i_q) = (sum G_k u_k, sum B_k B_plane u_k).
std::pair<GeometricPhasor, GeometricPhasor> parallel_quadrature(const GeometricPhasor& u,
                                                                 const std::vector<HarmonicAdmittance>& y);

GeometricPhasor scattered(const GeometricPhasor& i_p, const GeometricPhasor& i_a);

// Part of i on slot pairs where u has no component at all.
GeometricPhasor generated_current(const GeometricPhasor& u, const GeometricPhasor& i);

std::vector<CompensationSusceptance> compensation_susceptances(const std::vector<HarmonicAdmittance>& y);

// Y_k = i_k u_k^-1 for every slot pair where u is nonzero (measured loads).
std::vector<HarmonicAdmittance> estimate_admittances(const GeometricPhasor& u, const GeometricPhasor& i);

// Full decomposition of a measured current; admittances are estimated from u and i.
CurrentComponents decompose(const GeometricPhasor& u, const GeometricPhasor& i);
// Full decomposition with known load admittances (i_q, i_p from y; i_G from i).
CurrentComponents decompose(const GeometricPhasor& u, const GeometricPhasor& i,
                            const std::vector<HarmonicAdmittance>& y);

// u i_s and u i_q. Reported for completeness; neither carries a physical power meaning.
GeometricPower scattered_power(const GeometricPhasor& u, const CurrentComponents& c);
GeometricPower quadrature_power(const GeometricPhasor& u, const CurrentComponents& c);

}  // namespace gapot
