#include "gapot/decompose.hpp"

#include "gapot/error.hpp"

namespace gapot {

namespace {

bool voltage_pair_present(const GeometricPhasor& u, std::size_t pair) {
  if (pair == 0) return u.dc() != 0.0;
  return u.mv.coefficient(Blade::basis(2 * pair - 1)) != 0.0 || u.mv.coefficient(Blade::basis(2 * pair)) != 0.0;
}

}  // namespace

CurrentNorms CurrentComponents::norms() const {
  return {norm(i), norm(i_a), norm(i_N), norm(i_p), norm(i_q), norm(i_s), norm(i_G)};
}

std::pair<GeometricPhasor, GeometricPhasor> fryze_split(const GeometricPhasor& u, const GeometricPhasor& i) {
  require_same_layout(u, i, "fryze_split");
  const double u2 = norm_squared(u.mv);
  if (u2 == 0.0) throw DomainError("fryze_split: zero voltage");
  GeometricPhasor i_a = (inner_vectors(u, i) / u2) * u;
  GeometricPhasor i_n = i - i_a;
  return {std::move(i_a), std::move(i_n)};
}

std::pair<GeometricPhasor, GeometricPhasor> parallel_quadrature(const GeometricPhasor& u,
                                                                 const std::vector<HarmonicAdmittance>& y) {
  std::vector<HarmonicAdmittance> conductive, susceptive;
  for (const auto& a : y) {
    conductive.push_back({a.order, a.conductance, 0.0, a.plane});
    susceptive.push_back({a.order, 0.0, a.susceptance, a.plane});
  }
  GeometricPhasor i_p = apply_admittances(u, conductive);
  GeometricPhasor i_q = apply_admittances(u, susceptive);
  return {std::move(i_p), std::move(i_q)};
}

GeometricPhasor scattered(const GeometricPhasor& i_p, const GeometricPhasor& i_a) { return i_p - i_a; }

GeometricPhasor generated_current(const GeometricPhasor& u, const GeometricPhasor& i) {
  require_same_layout(u, i, "generated_current");
  GeometricPhasor out(u.layout);
  for (std::size_t pair = 0; pair <= u.layout.pair_count(); ++pair) {
    if (!voltage_pair_present(u, pair)) out = out + i.pair_part(pair);
  }
  return out;
}

std::vector<CompensationSusceptance> compensation_susceptances(const std::vector<HarmonicAdmittance>& y) {
  std::vector<CompensationSusceptance> out;
  for (const auto& a : y) out.push_back({a.order, a.susceptance == 0.0 ? 0.0 : -a.susceptance});
  return out;
}

std::vector<HarmonicAdmittance> estimate_admittances(const GeometricPhasor& u, const GeometricPhasor& i) {
  require_same_layout(u, i, "estimate_admittances");
  std::vector<HarmonicAdmittance> y;
  for (std::size_t pair = 0; pair <= u.layout.pair_count(); ++pair) {
    if (!voltage_pair_present(u, pair)) continue;
    const Multivector u_k = u.pair_part(pair).mv;
    const Multivector ratio = i.pair_part(pair).mv * inverse_vector(u_k);
    const Blade plane = pair == 0 ? Blade::scalar() : Blade::plane(2 * pair - 1, 2 * pair);
    y.push_back({u.layout.order_of_pair(pair), ratio.scalar_part(), pair == 0 ? 0.0 : ratio.coefficient(plane), plane});
  }
  return y;
}

CurrentComponents decompose(const GeometricPhasor& u, const GeometricPhasor& i,
                            const std::vector<HarmonicAdmittance>& y) {
  require_same_layout(u, i, "decompose");
  auto [i_a, i_n] = fryze_split(u, i);
  auto [i_p, i_q] = parallel_quadrature(u, y);
  GeometricPhasor i_s = scattered(i_p, i_a);
  GeometricPhasor i_g = generated_current(u, i);
  return {i, std::move(i_a), std::move(i_n), std::move(i_p), std::move(i_q), std::move(i_s), std::move(i_g)};
}

CurrentComponents decompose(const GeometricPhasor& u, const GeometricPhasor& i) {
  return decompose(u, i, estimate_admittances(u, i));
}

GeometricPower scattered_power(const GeometricPhasor& u, const CurrentComponents& c) {
  return geometric_power(u, c.i_s);
}

GeometricPower quadrature_power(const GeometricPhasor& u, const CurrentComponents& c) {
  return geometric_power(u, c.i_q);
}

}  // namespace gapot
