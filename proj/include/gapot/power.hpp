#pragma once

// Geometric apparent power M = u i = u.i + u^i.
//
// The scalar part is the active power. The coefficient of the plane
// s(2k-1)(2k) is the reactive power of harmonic k; every other bivector mixes
// a voltage and a current component of different frequencies.

#include <vector>

#include "gapot/multivector.hpp"
#include "gapot/phasor.hpp"

namespace gapot {

struct GeometricPower {
  Multivector mv;
  BasisLayout layout;

  double active() const { return mv.scalar_part(); }
  Multivector non_active() const { return grade(mv, 2); }
};

struct HarmonicPQ {
  double order = 1.0;
  double p = 0.0;  // W
  double q = 0.0;  // var, coefficient of the harmonic's own plane
};

struct CrossTerm {
  Blade blade;
  double va = 0.0;
};

GeometricPower geometric_power(const GeometricPhasor& u, const GeometricPhasor& i);

double apparent(const GeometricPower& m);

// One entry per slot pair occupied in u or i (DC is order 0 with q = 0).
std::vector<HarmonicPQ> harmonic_pq(const GeometricPhasor& u, const GeometricPhasor& i);

// Bivector terms outside the per-harmonic planes.
std::vector<CrossTerm> cross_terms(const GeometricPower& m);

double power_factor(const GeometricPower& m);

}  // namespace gapot
