#include "gapot/phasor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gapot/error.hpp"
#include "gapot/kernels.hpp"

namespace gapot {

namespace {

constexpr double kOrderTolerance = 1e-9;

bool is_integer_order(double order) { return std::abs(order - std::round(order)) < kOrderTolerance; }

void check_components(const std::vector<HarmonicComponent>& list, bool integer, const char* what) {
  double previous = 0.0;
  for (const auto& c : list) {
    if (!std::isfinite(c.order) || c.order <= 0.0) throw DomainError(std::string(what) + ": order must be positive");
    if (integer != is_integer_order(c.order)) {
      throw DomainError(std::string(what) + (integer ? ": order must be an integer" : ": order must be non-integer"));
    }
    if (c.order <= previous + kOrderTolerance) {
      throw DomainError(std::string(what) + ": orders must be unique and strictly increasing");
    }
    if (!std::isfinite(c.rms) || c.rms < 0.0) throw DomainError(std::string(what) + ": rms must be >= 0");
    if (!std::isfinite(c.phase)) throw DomainError(std::string(what) + ": phase must be finite");
    previous = c.order;
  }
}

}  // namespace

double SpectralSignal::omega() const { return 2.0 * std::numbers::pi * fundamental_hz; }

void SpectralSignal::validate() const {
  if (!std::isfinite(fundamental_hz) || fundamental_hz <= 0.0) throw DomainError("fundamental_hz must be > 0");
  if (!std::isfinite(dc)) throw DomainError("dc must be finite");
  check_components(harmonics, true, "harmonic");
  check_components(interharmonics, false, "interharmonic");
}

double normalize_phase(double phase) {
  double p = std::remainder(phase, 2.0 * std::numbers::pi);
  if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
  return p;
}

BasisLayout::BasisLayout(int max_order, std::vector<double> interharmonic_orders)
    : max_order_(max_order), interharmonic_orders_(std::move(interharmonic_orders)) {
  if (max_order_ < 0) throw DomainError("layout: max order must be >= 0");
  double previous = 0.0;
  for (double o : interharmonic_orders_) {
    if (!(o > previous + kOrderTolerance) || is_integer_order(o)) {
      throw DomainError("layout: inter-harmonic orders must be positive, non-integer and increasing");
    }
    previous = o;
  }
  if (dimension() > kMaxDimension) throw DimensionError("layout dimension " + std::to_string(dimension()) + " too large");
}

BasisLayout BasisLayout::covering(std::span<const SpectralSignal> signals) {
  int n = 0;
  std::vector<double> inter;
  for (const auto& s : signals) {
    for (const auto& h : s.harmonics) n = std::max(n, static_cast<int>(std::lround(h.order)));
    for (const auto& h : s.interharmonics) inter.push_back(h.order);
  }
  std::sort(inter.begin(), inter.end());
  inter.erase(std::unique(inter.begin(), inter.end(),
                          [](double a, double b) { return std::abs(a - b) < kOrderTolerance; }),
              inter.end());
  return BasisLayout(n, std::move(inter));
}

std::optional<std::pair<std::size_t, std::size_t>> BasisLayout::slots(double order) const {
  if (is_integer_order(order)) {
    const long k = std::lround(order);
    if (k < 1 || k > max_order_) return std::nullopt;
    const auto ku = static_cast<std::size_t>(k);
    return std::pair{2 * ku - 1, 2 * ku};
  }
  for (std::size_t m = 0; m < interharmonic_orders_.size(); ++m) {
    if (std::abs(interharmonic_orders_[m] - order) < kOrderTolerance) {
      const std::size_t pair = static_cast<std::size_t>(max_order_) + m + 1;
      return std::pair{2 * pair - 1, 2 * pair};
    }
  }
  return std::nullopt;
}

Blade BasisLayout::plane(double order) const {
  const auto s = slots(order);
  if (!s) throw DomainError("layout has no slot for order " + std::to_string(order));
  return Blade::plane(s->first, s->second);
}

double BasisLayout::order_of_pair(std::size_t pair) const {
  if (pair == 0) return 0.0;
  if (pair <= static_cast<std::size_t>(max_order_)) return static_cast<double>(pair);
  const std::size_t m = pair - static_cast<std::size_t>(max_order_) - 1;
  if (m >= interharmonic_orders_.size()) throw DimensionError("slot pair outside layout");
  return interharmonic_orders_[m];
}

GeometricPhasor::GeometricPhasor(Multivector m, BasisLayout l) : mv(std::move(m)), layout(std::move(l)) {
  if (mv.dimension() != layout.dimension()) throw DimensionError("phasor dimension does not match its layout");
  if (!mv.has_only_grade(1)) throw DomainError("geometric phasor must be a vector");
}

GeometricPhasor GeometricPhasor::pair_part(std::size_t pair) const {
  Multivector part(mv.dimension());
  if (pair == 0) {
    part.add(Blade::basis(0), dc());
  } else {
    for (std::size_t idx : {2 * pair - 1, 2 * pair}) part.add(Blade::basis(idx), mv.coefficient(Blade::basis(idx)));
  }
  return {std::move(part), layout};
}

void require_same_layout(const GeometricPhasor& a, const GeometricPhasor& b, const char* op) {
  if (!(a.layout == b.layout)) throw DimensionError(std::string(op) + ": phasors use different basis layouts");
}

GeometricPhasor operator+(const GeometricPhasor& a, const GeometricPhasor& b) {
  require_same_layout(a, b, "add");
  return {a.mv + b.mv, a.layout};
}

GeometricPhasor operator-(const GeometricPhasor& a, const GeometricPhasor& b) {
  require_same_layout(a, b, "subtract");
  return {a.mv - b.mv, a.layout};
}

GeometricPhasor operator*(double s, const GeometricPhasor& a) { return {s * a.mv, a.layout}; }

double norm(const GeometricPhasor& p) { return norm(p.mv); }

double inner_vectors(const GeometricPhasor& a, const GeometricPhasor& b) {
  require_same_layout(a, b, "inner_vectors");
  return inner_vectors(a.mv, b.mv);
}

GeometricPhasor to_phasor(const SpectralSignal& s, const BasisLayout& layout) {
  s.validate();
  Multivector mv(layout.dimension());
  mv.add(Blade::basis(0), s.dc);
  auto place = [&](const HarmonicComponent& c) {
    const auto slot = layout.slots(c.order);
    if (!slot) throw DomainError("no basis slot for order " + std::to_string(c.order));
    mv.add(Blade::basis(slot->first), c.rms * std::sin(c.phase));
    mv.add(Blade::basis(slot->second), c.rms * std::cos(c.phase));
  };
  for (const auto& c : s.harmonics) place(c);
  for (const auto& c : s.interharmonics) place(c);
  return {std::move(mv), layout};
}

SpectralSignal from_phasor(const GeometricPhasor& p, double fundamental_hz) {
  SpectralSignal s;
  s.fundamental_hz = fundamental_hz;
  s.dc = p.dc();
  for (std::size_t pair = 1; pair <= p.layout.pair_count(); ++pair) {
    const double a = p.mv.coefficient(Blade::basis(2 * pair - 1));
    const double b = p.mv.coefficient(Blade::basis(2 * pair));
    if (a == 0.0 && b == 0.0) continue;
    const double order = p.layout.order_of_pair(pair);
    HarmonicComponent c{order, std::hypot(a, b), normalize_phase(std::atan2(a, b))};
    (pair <= static_cast<std::size_t>(p.layout.max_order()) ? s.harmonics : s.interharmonics).push_back(c);
  }
  return s;
}

std::vector<double> reconstruct(const SpectralSignal& s, std::span<const double> times) {
  const double w = s.omega();
  std::vector<kernels::Tone> tones;
  for (const auto* list : {&s.harmonics, &s.interharmonics}) {
    for (const auto& c : *list) tones.push_back({c.order * w, c.rms, c.phase});
  }
  return kernels::synthesize(s.dc, tones, times);
}

std::vector<double> sample_times(std::size_t count, double sample_rate_hz) {
  std::vector<double> t(count);
  for (std::size_t i = 0; i < count; ++i) t[i] = static_cast<double>(i) / sample_rate_hz;
  return t;
}

}  // namespace gapot
