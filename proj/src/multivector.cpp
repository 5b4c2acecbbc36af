#include "gapot/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gapot/error.hpp"

namespace gapot {

namespace {

void require_same_dimension(const Multivector& a, const Multivector& b, const char* op) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dimension()) +
                         " vs " + std::to_string(b.dimension()) + ")");
  }
}

// (-1)^(k(k-1)/2): + + - - + + - - ...
double reverse_sign(int k) { return ((k / 2) % 2 == 0) ? 1.0 : -1.0; }

std::string format_coefficient(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

Blade Blade::from_indices(std::initializer_list<std::size_t> indices) {
  BladeMask mask = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxDimension) throw DimensionError("blade index out of range");
    const BladeMask bit = BladeMask{1} << i;
    if (mask & bit) throw DomainError("repeated index in blade");
    mask |= bit;
  }
  return {mask};
}

std::vector<std::size_t> Blade::indices() const {
  std::vector<std::size_t> out;
  for (BladeMask m = mask; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::string Blade::name() const {
  if (mask == 0) return "1";
  const auto idx = indices();
  const bool wide = std::any_of(idx.begin(), idx.end(), [](std::size_t i) { return i >= 10; });
  std::string out = "s";
  for (std::size_t i : idx) out += wide ? "(" + std::to_string(i) + ")" : std::to_string(i);
  return out;
}

Multivector::Multivector(std::size_t dimension) : dimension_(dimension) {
  if (dimension > kMaxDimension) {
    throw DimensionError("dimension " + std::to_string(dimension) + " exceeds " + std::to_string(kMaxDimension));
  }
}

Multivector Multivector::scalar(std::size_t dimension, double value) {
  return blade(dimension, Blade::scalar(), value);
}

Multivector Multivector::blade(std::size_t dimension, Blade b, double coefficient) {
  Multivector m(dimension);
  m.add(b, coefficient);
  return m;
}

Multivector Multivector::vector(std::size_t dimension, std::span<const double> coefficients) {
  if (coefficients.size() > dimension) throw DimensionError("vector has more coefficients than dimension");
  Multivector m(dimension);
  for (std::size_t i = 0; i < coefficients.size(); ++i) m.add(Blade::basis(i), coefficients[i]);
  return m;
}

double Multivector::coefficient(Blade b) const {
  const auto it = terms_.find(b.mask);
  return it == terms_.end() ? 0.0 : it->second;
}

Multivector& Multivector::add(Blade b, double coefficient) {
  if (dimension_ < kMaxDimension && (b.mask >> dimension_) != 0) {
    throw DimensionError("blade " + b.name() + " outside dimension " + std::to_string(dimension_));
  }
  const double updated = coefficient + this->coefficient(b);
  if (std::abs(updated) < kPruneEpsilon) {
    terms_.erase(b.mask);
  } else {
    terms_[b.mask] = updated;
  }
  return *this;
}

std::vector<double> Multivector::vector_coefficients() const {
  std::vector<double> out(dimension_, 0.0);
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) == 1) out[static_cast<std::size_t>(std::countr_zero(mask))] = c;
  }
  return out;
}

bool Multivector::has_only_grade(int k) const {
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return std::popcount(t.first) == k; });
}

int Multivector::max_grade() const {
  int g = 0;
  for (const auto& t : terms_) g = std::max(g, std::popcount(t.first));
  return g;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_dimension(*this, other, "add");
  for (const auto& [mask, c] : other.terms_) add({mask}, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_dimension(*this, other, "subtract");
  for (const auto& [mask, c] : other.terms_) add({mask}, -c);
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  Terms scaled;
  for (const auto& [mask, c] : terms_) {
    const double v = c * s;
    if (std::abs(v) >= kPruneEpsilon) scaled.emplace(mask, v);
  }
  terms_ = std::move(scaled);
  return *this;
}

bool operator==(const Multivector& a, const Multivector& b) { return approx_equal(a, b); }

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<BladeMask, double>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int gx = std::popcount(x.first), gy = std::popcount(y.first);
    if (gx != gy) return gx < gy;
    return Blade{x.first}.indices() < Blade{y.first}.indices();
  });
  std::string out;
  for (const auto& [mask, c] : ordered) {
    const Blade b{mask};
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += format_coefficient(std::abs(c));
    if (!b.is_scalar()) out += b.name();
  }
  return out;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tolerance) {
  require_same_dimension(a, b, "compare");
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    double diff;
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      diff = ia->second;
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      diff = ib->second;
      ++ib;
    } else {
      diff = ia->second - ib->second;
      ++ia;
      ++ib;
    }
    if (std::abs(diff) > tolerance) return false;
  }
  return true;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "geometric_product");
  Multivector out(a.dimension());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add({ma ^ mb}, blade_product_sign(ma, mb) * ca * cb);
    }
  }
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

Multivector outer(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "outer");
  Multivector out(a.dimension());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      out.add({ma | mb}, blade_product_sign(ma, mb) * ca * cb);
    }
  }
  return out;
}

double inner_vectors(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "inner_vectors");
  if (!a.has_only_grade(1) || !b.has_only_grade(1)) throw DomainError("inner_vectors: operands must be vectors");
  double sum = 0.0;
  for (const auto& [mask, c] : a.terms()) sum += c * b.coefficient({mask});
  return sum;
}

Multivector reverse(const Multivector& m) {
  Multivector out(m.dimension());
  for (const auto& [mask, c] : m.terms()) out.add({mask}, reverse_sign(std::popcount(mask)) * c);
  return out;
}

Multivector grade(const Multivector& m, int k) {
  Multivector out(m.dimension());
  for (const auto& [mask, c] : m.terms()) {
    if (std::popcount(mask) == k) out.add({mask}, c);
  }
  return out;
}

double norm_squared(const Multivector& m) {
  // <reverse(m) m>_0 reduces to the sum of squares for an orthonormal basis.
  double sum = 0.0;
  for (const auto& t : m.terms()) sum += t.second * t.second;
  return sum;
}

double norm(const Multivector& m) { return std::sqrt(norm_squared(m)); }

Multivector inverse_vector(const Multivector& a) {
  if (!a.has_only_grade(1)) throw DomainError("inverse_vector: operand is not a vector");
  const double n2 = norm_squared(a);
  if (n2 == 0.0) throw DomainError("inverse_vector: zero vector");
  return a / n2;
}

Multivector inverse_spinor(const Multivector& z) {
  BladeMask plane = 0;
  for (const auto& [mask, c] : z.terms()) {
    const int g = std::popcount(mask);
    if (g == 0) continue;
    if (g != 2 || (plane != 0 && plane != mask)) {
      throw DomainError("inverse_spinor: operand must be scalar plus a single-plane bivector");
    }
    plane = mask;
  }
  const double n2 = norm_squared(z);
  if (n2 == 0.0) throw DomainError("inverse_spinor: zero operand");
  return reverse(z) / n2;
}

Multivector rotor_apply(Blade plane, double angle, const Multivector& v) {
  if (plane.grade() != 2) throw DomainError("rotor_apply: plane must be a grade-2 blade");
  Multivector rotor = Multivector::scalar(v.dimension(), std::cos(angle));
  rotor.add(plane, std::sin(angle));
  return rotor * v;
}

}  // namespace gapot
