#pragma once

// Sparse Euclidean geometric algebra over basis vectors s0 ... s(N-1).
//
// Blades are bitmasks (bit i set <=> s_i is a factor, factors in ascending
// order). Every basis vector squares to +1. A Multivector is an ordered map
// blade -> coefficient; coefficients below kPruneEpsilon are never stored.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gapot {

using BladeMask = std::uint64_t;

inline constexpr std::size_t kMaxDimension = 64;
inline constexpr double kPruneEpsilon = 1e-12;
inline constexpr double kDefaultTolerance = 1e-9;

struct Blade {
  BladeMask mask = 0;

  constexpr int grade() const noexcept { return std::popcount(mask); }
  constexpr bool is_scalar() const noexcept { return mask == 0; }

  static constexpr Blade scalar() noexcept { return {0}; }
  static constexpr Blade basis(std::size_t index) noexcept { return {BladeMask{1} << index}; }
  // Unit bivector s_i s_j with i < j.
  static constexpr Blade plane(std::size_t i, std::size_t j) noexcept {
    return {(BladeMask{1} << i) | (BladeMask{1} << j)};
  }
  static Blade from_indices(std::initializer_list<std::size_t> indices);

  // Ascending basis indices of the factors.
  std::vector<std::size_t> indices() const;
  // "1", "s2", "s12", "s(9)(10)" when any index has more than one digit.
  std::string name() const;

  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

// Sign (+1/-1) of the blade product a*b, i.e. the parity of the transpositions
// needed to sort the concatenated factor list. The resulting blade is a ^ b.
constexpr int blade_product_sign(BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

class Multivector {
 public:
  using Terms = std::map<BladeMask, double>;

  explicit Multivector(std::size_t dimension);

  static Multivector scalar(std::size_t dimension, double value);
  static Multivector blade(std::size_t dimension, Blade b, double coefficient = 1.0);
  // Grade-1 multivector sum_i coefficients[i] s_i; coefficients.size() <= dimension.
  static Multivector vector(std::size_t dimension, std::span<const double> coefficients);

  std::size_t dimension() const noexcept { return dimension_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coefficient(Blade b) const;
  double scalar_part() const { return coefficient(Blade::scalar()); }

  // Accumulates coefficient onto blade b, pruning the result if it cancels.
  Multivector& add(Blade b, double coefficient);

  // Dense coefficient list of the grade-1 part, length dimension().
  std::vector<double> vector_coefficients() const;

  bool has_only_grade(int k) const;
  int max_grade() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }

  // Term-wise equality with the default tolerance.
  friend bool operator==(const Multivector& a, const Multivector& b);

  // Terms listed by ascending grade, then ascending blade, e.g. "10000 - 5000s12 + 5000s56".
  std::string to_string() const;

 private:
  std::size_t dimension_;
  Terms terms_;
};

// max over blades |a_B - b_B| <= tolerance. Dimensions must match.
bool approx_equal(const Multivector& a, const Multivector& b, double tolerance = kDefaultTolerance);

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector operator*(const Multivector& a, const Multivector& b);

// Outer (wedge) product: only blade pairs with disjoint factors contribute.
Multivector outer(const Multivector& a, const Multivector& b);

// Dot product of two grade-1 multivectors.
double inner_vectors(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& m);
Multivector grade(const Multivector& m, int k);

// sqrt(<reverse(m) m>_0), the Euclidean norm of the coefficient list.
double norm(const Multivector& m);
double norm_squared(const Multivector& m);

// a / |a|^2 for a nonzero vector.
Multivector inverse_vector(const Multivector& a);

// reverse(z) / |z|^2 for z = s + b*B with a single bivector plane B.
Multivector inverse_spinor(const Multivector& z);

// exp(angle * plane) * v with exp(theta B) = cos(theta) + sin(theta) B.
Multivector rotor_apply(Blade plane, double angle, const Multivector& v);

}  // namespace gapot
