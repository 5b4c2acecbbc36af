#include "gapot/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapot/error.hpp"

namespace gapot {

namespace {

bool pair_occupied(const GeometricPhasor& p, std::size_t pair) {
  if (pair == 0) return p.dc() != 0.0;
  return p.mv.coefficient(Blade::basis(2 * pair - 1)) != 0.0 || p.mv.coefficient(Blade::basis(2 * pair)) != 0.0;
}

const HarmonicAdmittance* find_admittance(const std::vector<HarmonicAdmittance>& y, double order) {
  for (const auto& a : y) {
    if (std::abs(a.order - order) < 1e-9) return &a;
  }
  return nullptr;
}

// Left-multiplies each occupied slot pair of p by spinor_for(order, pair).
template <typename SpinorFor>
GeometricPhasor per_plane(const GeometricPhasor& p, SpinorFor spinor_for) {
  Multivector out(p.mv.dimension());
  for (std::size_t pair = 0; pair <= p.layout.pair_count(); ++pair) {
    if (!pair_occupied(p, pair)) continue;
    out += spinor_for(p.layout.order_of_pair(pair), pair) * p.pair_part(pair).mv;
  }
  return {std::move(out), p.layout};
}

}  // namespace

void SeriesRLC::validate() const {
  if (!std::isfinite(r) || r < 0.0) throw DomainError("circuit: r must be >= 0");
  if (!std::isfinite(l) || l < 0.0) throw DomainError("circuit: l must be >= 0");
  if (c && (!std::isfinite(*c) || *c <= 0.0)) throw DomainError("circuit: c must be > 0 when present");
}

Multivector HarmonicImpedance::as_multivector(std::size_t dimension) const {
  Multivector m = Multivector::scalar(dimension, resistance);
  if (reactance != 0.0) m.add(plane, reactance);
  return m;
}

Multivector HarmonicAdmittance::as_multivector(std::size_t dimension) const {
  Multivector m = Multivector::scalar(dimension, conductance);
  if (susceptance != 0.0) m.add(plane, susceptance);
  return m;
}

HarmonicImpedance impedance_at(const SeriesRLC& net, double order, double omega, const BasisLayout& layout) {
  net.validate();
  const double w = order * omega;
  if (w == 0.0) {
    if (net.c) throw DomainError("series capacitor blocks DC: impedance is unbounded");
    return {0.0, net.r, 0.0, Blade::scalar()};
  }
  if (w < 0.0 || !std::isfinite(w)) throw DomainError("impedance_at: order * omega must be positive");
  double x = w * net.l;
  if (net.c) x -= 1.0 / (w * *net.c);
  return {order, net.r, x, layout.plane(order)};
}

HarmonicImpedance impedance_at(const SeriesRLC& net, int k, double omega) {
  return impedance_at(net, static_cast<double>(k), omega, BasisLayout(std::max(k, 0)));
}

HarmonicAdmittance admittance_at(const HarmonicImpedance& z) {
  const double mag2 = z.resistance * z.resistance + z.reactance * z.reactance;
  if (mag2 == 0.0) throw DomainError("zero impedance has no admittance (short circuit)");
  return {z.order, z.resistance / mag2, -z.reactance / mag2, z.plane};
}

std::vector<HarmonicAdmittance> admittances_for(const GeometricPhasor& u, const SeriesRLC& net, double omega) {
  std::vector<HarmonicAdmittance> y;
  for (std::size_t pair = 0; pair <= u.layout.pair_count(); ++pair) {
    if (!pair_occupied(u, pair)) continue;
    y.push_back(admittance_at(impedance_at(net, u.layout.order_of_pair(pair), omega, u.layout)));
  }
  return y;
}

GeometricPhasor apply_admittances(const GeometricPhasor& u, const std::vector<HarmonicAdmittance>& y) {
  return per_plane(u, [&](double order, std::size_t) {
    const HarmonicAdmittance* a = find_admittance(y, order);
    if (!a) throw DomainError("no admittance supplied for order " + std::to_string(order));
    return a->as_multivector(u.mv.dimension());
  });
}

GeometricPhasor solve_current(const GeometricPhasor& u, const SeriesRLC& net, double omega) {
  return apply_admittances(u, admittances_for(u, net, omega));
}

GeometricPhasor derivative_phasor(const GeometricPhasor& p, double omega) {
  const std::size_t dim = p.mv.dimension();
  return per_plane(p, [&](double order, std::size_t pair) {
    if (pair == 0) return Multivector(dim);
    return Multivector::blade(dim, Blade::plane(2 * pair - 1, 2 * pair), order * omega);
  });
}

GeometricPhasor integral_phasor(const GeometricPhasor& p, double omega) {
  const std::size_t dim = p.mv.dimension();
  return per_plane(p, [&](double order, std::size_t pair) {
    if (pair == 0) throw DomainError("integral of a DC component is unbounded");
    return Multivector::blade(dim, Blade::plane(2 * pair - 1, 2 * pair), -1.0 / (order * omega));
  });
}

}  // namespace gapot
