#include "gapot/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gapot/error.hpp"

namespace gapot {

namespace {

double require_number(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::vector<HarmonicComponent> components_from_json(const json& j, const char* key) {
  std::vector<HarmonicComponent> out;
  if (!j.contains(key)) return out;
  const json& list = j.at(key);
  if (!list.is_array()) throw ParseError(std::string("signal: '") + key + "' must be an array");
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string where = std::string(key) + "[" + std::to_string(n) + "]";
    out.push_back({require_number(list[n], "order", where), require_number(list[n], "rms", where),
                   require_number(list[n], "phase_rad", where)});
  }
  return out;
}

json components_to_json(const std::vector<HarmonicComponent>& list) {
  json out = json::array();
  for (const auto& c : list) out.push_back({{"order", round6(c.order)}, {"rms", round6(c.rms)}, {"phase_rad", round6(c.phase)}});
  return out;
}

std::string basis_name(std::size_t index) { return Blade::basis(index).name(); }

void pad(std::ostream& out, const std::string& s, int width) { out << std::setw(width) << s; }

}  // namespace

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

double round6(double v) {
  const double r = std::strtod(fmt6(v).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(const SpectralSignal& s) {
  return {{"fundamental_hz", round6(s.fundamental_hz)},
          {"dc", round6(s.dc)},
          {"harmonics", components_to_json(s.harmonics)},
          {"interharmonics", components_to_json(s.interharmonics)}};
}

SpectralSignal spectral_signal_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("signal: expected a JSON object");
  SpectralSignal s;
  s.fundamental_hz = require_number(j, "fundamental_hz", "signal");
  if (j.contains("dc")) s.dc = require_number(j, "dc", "signal");
  s.harmonics = components_from_json(j, "harmonics");
  s.interharmonics = components_from_json(j, "interharmonics");
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("signal: ") + e.what());
  }
  return s;
}

SeriesRLC circuit_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("circuit: expected a JSON object");
  SeriesRLC net;
  net.r = require_number(j, "r_ohm", "circuit");
  net.l = require_number(j, "l_henry", "circuit");
  if (j.contains("c_farad") && !j.at("c_farad").is_null()) net.c = require_number(j, "c_farad", "circuit");
  try {
    net.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return net;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

PowerReport make_power_report(const GeometricPhasor& u, const GeometricPhasor& i) {
  GeometricPower m = geometric_power(u, i);
  const double s = apparent(m);
  const std::optional<double> pf = s > 0.0 ? std::optional(power_factor(m)) : std::nullopt;
  return {m.active(), s, pf, harmonic_pq(u, i), cross_terms(m), std::move(m)};
}

json to_json(const PowerReport& r) {
  json per = json::array();
  for (const auto& h : r.per_harmonic) per.push_back({{"order", round6(h.order)}, {"p_w", round6(h.p)}, {"q_var", round6(h.q)}});
  json cross = json::array();
  for (const auto& t : r.cross_terms) {
    json idx = json::array();
    for (std::size_t k : t.blade.indices()) idx.push_back(k);
    cross.push_back({{"blade_indices", idx}, {"va", round6(t.va)}});
  }
  return {{"p_w", round6(r.p_w)},
          {"apparent_va", round6(r.apparent_va)},
          {"pf", r.pf ? json(round6(*r.pf)) : json(nullptr)},
          {"per_harmonic", per},
          {"cross_terms", cross},
          {"multivector", r.m.mv.to_string()}};
}

json to_json(const CurrentComponents& c) {
  const std::size_t dim = c.i.mv.dimension();
  const std::vector<std::pair<const char*, const GeometricPhasor*>> cols{
      {"i_p", &c.i_p}, {"i_a", &c.i_a}, {"i_s", &c.i_s}, {"i_q", &c.i_q}, {"i_G", &c.i_G}, {"i_N", &c.i_N}, {"i", &c.i}};
  json rows = json::array();
  for (std::size_t k = 0; k < dim; ++k) {
    json row{{"basis", basis_name(k)}};
    for (const auto& [name, p] : cols) row[name] = round6(p->mv.coefficient(Blade::basis(k)));
    rows.push_back(row);
  }
  json norms;
  for (const auto& [name, p] : cols) norms[name] = round6(norm(*p));
  return {{"rows", rows}, {"norms", norms}};
}

json to_json(const std::vector<CompensationSusceptance>& b) {
  json out = json::array();
  for (const auto& s : b) out.push_back({{"order", round6(s.order)}, {"siemens", round6(s.siemens)}});
  return out;
}

void write_decomposition_csv(std::ostream& out, const CurrentComponents& c) {
  const std::vector<const GeometricPhasor*> cols{&c.i_p, &c.i_a, &c.i_s, &c.i_q, &c.i_G, &c.i_N, &c.i};
  out << "basis,i_p,i_a,i_s,i_q,i_G,i_N,i\n";
  for (std::size_t k = 0; k < c.i.mv.dimension(); ++k) {
    out << basis_name(k);
    for (const auto* p : cols) out << ',' << fmt6(p->mv.coefficient(Blade::basis(k)));
    out << '\n';
  }
  out << "norm";
  for (const auto* p : cols) out << ',' << fmt6(norm(*p));
  out << '\n';
}

void write_plot_csv(std::ostream& out, const WaveformPair& w, const CurrentComponents& c, double fundamental_hz) {
  const std::size_t n = w.u.samples.size();
  if (w.i.samples.size() != n) throw DimensionError("plot: u and i lengths differ");
  const auto t = sample_times(n, w.u.sample_rate_hz);
  const auto i_a = reconstruct(from_phasor(c.i_a, fundamental_hz), t);
  const auto i_n = reconstruct(from_phasor(c.i_N, fundamental_hz), t);
  out << "t,u,i,p,i_a,i_N\n";
  for (std::size_t m = 0; m < n; ++m) {
    out << fmt6(t[m]) << ',' << fmt6(w.u.samples[m]) << ',' << fmt6(w.i.samples[m]) << ','
        << fmt6(w.u.samples[m] * w.i.samples[m]) << ',' << fmt6(i_a[m]) << ',' << fmt6(i_n[m]) << '\n';
  }
}

void write_spectrum_table(std::ostream& out, const SpectralSignal& u, const SpectralSignal& i) {
  out << "Spectrum\n";
  out << std::left << std::setw(8) << "order" << std::right;
  for (const char* h : {"|V| (V)", "phi_v (rad)", "|I| (A)", "phi_i (rad)"}) pad(out, h, 14);
  out << '\n';
  auto find = [](const SpectralSignal& s, double order) -> const HarmonicComponent* {
    for (const auto* list : {&s.harmonics, &s.interharmonics}) {
      for (const auto& c : *list) {
        if (std::abs(c.order - order) < 1e-9) return &c;
      }
    }
    return nullptr;
  };
  std::vector<double> orders;
  for (const auto* s : {&u, &i}) {
    for (const auto* list : {&s->harmonics, &s->interharmonics}) {
      for (const auto& c : *list) orders.push_back(c.order);
    }
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               orders.end());
  if (u.dc != 0.0 || i.dc != 0.0) {
    out << std::left << std::setw(8) << "dc" << std::right;
    pad(out, fmt6(u.dc), 14);
    pad(out, "-", 14);
    pad(out, fmt6(i.dc), 14);
    pad(out, "-", 14);
    out << '\n';
  }
  for (double order : orders) {
    out << std::left << std::setw(8) << fmt6(order) << std::right;
    for (const auto* s : {&u, &i}) {
      const HarmonicComponent* c = find(*s, order);
      pad(out, c ? fmt6(c->rms) : "0", 14);
      pad(out, c ? fmt6(c->phase) : "-", 14);
    }
    out << '\n';
  }
}

void write_pq_table(std::ostream& out, const PowerReport& r) {
  out << "Harmonic power\n";
  out << std::left << std::setw(8) << "order" << std::right;
  pad(out, "P (W)", 14);
  pad(out, "Q (var)", 14);
  out << '\n';
  for (const auto& h : r.per_harmonic) {
    out << std::left << std::setw(8) << fmt6(h.order) << std::right;
    pad(out, fmt6(h.p), 14);
    pad(out, fmt6(h.q), 14);
    out << '\n';
  }
  out << std::left << std::setw(8) << "total" << std::right;
  pad(out, fmt6(r.p_w), 14);
  out << '\n';
  out << "apparent |M| = " << fmt6(r.apparent_va) << " VA, pf = " << (r.pf ? fmt6(*r.pf) : std::string("n/a")) << '\n';
  out << "M = " << r.m.mv.to_string() << '\n';
}

void write_current_table(std::ostream& out, const CurrentComponents& c) {
  const std::vector<std::pair<const char*, const GeometricPhasor*>> cols{
      {"i_p", &c.i_p}, {"i_a", &c.i_a}, {"i_s", &c.i_s}, {"i_q", &c.i_q}, {"i_G", &c.i_G}, {"i_N", &c.i_N}, {"i", &c.i}};
  out << "Current components\n";
  out << std::left << std::setw(8) << "basis" << std::right;
  for (const auto& [name, p] : cols) pad(out, name, 12);
  out << '\n';
  for (std::size_t k = 0; k < c.i.mv.dimension(); ++k) {
    out << std::left << std::setw(8) << basis_name(k) << std::right;
    for (const auto& [name, p] : cols) pad(out, fmt6(p->mv.coefficient(Blade::basis(k))), 12);
    out << '\n';
  }
  out << std::left << std::setw(8) << "|.|" << std::right;
  for (const auto& [name, p] : cols) pad(out, fmt6(norm(*p)), 12);
  out << '\n';
}

}  // namespace gapot
