#include "gapot/power.hpp"

#include "gapot/error.hpp"

namespace gapot {

GeometricPower geometric_power(const GeometricPhasor& u, const GeometricPhasor& i) {
  require_same_layout(u, i, "geometric_power");
  return {u.mv * i.mv, u.layout};
}

double apparent(const GeometricPower& m) { return norm(m.mv); }

std::vector<HarmonicPQ> harmonic_pq(const GeometricPhasor& u, const GeometricPhasor& i) {
  require_same_layout(u, i, "harmonic_pq");
  std::vector<HarmonicPQ> out;
  if (u.dc() != 0.0 || i.dc() != 0.0) out.push_back({0.0, u.dc() * i.dc(), 0.0});
  for (std::size_t pair = 1; pair <= u.layout.pair_count(); ++pair) {
    const Blade s = Blade::basis(2 * pair - 1), c = Blade::basis(2 * pair);
    const double ua = u.mv.coefficient(s), ub = u.mv.coefficient(c);
    const double ia = i.mv.coefficient(s), ib = i.mv.coefficient(c);
    if (ua == 0.0 && ub == 0.0 && ia == 0.0 && ib == 0.0) continue;
    out.push_back({u.layout.order_of_pair(pair), ua * ia + ub * ib, ua * ib - ub * ia});
  }
  return out;
}

std::vector<CrossTerm> cross_terms(const GeometricPower& m) {
  std::vector<CrossTerm> out;
  for (const auto& [mask, c] : m.mv.terms()) {
    const Blade b{mask};
    if (b.grade() != 2) continue;
    const auto idx = b.indices();
    const bool own_plane = idx[0] % 2 == 1 && idx[1] == idx[0] + 1;
    if (!own_plane) out.push_back({b, c});
  }
  return out;
}

double power_factor(const GeometricPower& m) {
  const double s = apparent(m);
  if (s == 0.0) throw DomainError("power factor undefined for zero apparent power");
  return m.active() / s;
}

}  // namespace gapot
