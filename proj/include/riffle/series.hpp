#pragma once

// Truncated power series in y with rational coefficients, and coefficient
// checks for the generating functions of the nested building-block sums:
//   F^(r)(y) = sum_L (M_r(2L) / 2^n) y^L.

#include <cstdint>
#include <vector>

#include "riffle/core.hpp"
#include "riffle/report.hpp"

namespace riffle {

/// Coefficients of y^0..y^order; arithmetic truncates at the order.
class SeriesGF {
 public:
  explicit SeriesGF(std::size_t order);
  SeriesGF(std::size_t order, std::vector<Rat> coeffs);

  static SeriesGF constant(std::size_t order, const Rat& c);
  /// 1 - y
  static SeriesGF one_minus_y(std::size_t order);
  /// (1 - y)^a by the binomial series.
  static SeriesGF power_one_minus_y(std::size_t order, const Rat& a);
  /// sqrt(1 - y) as a series; every half-integer power is built from it.
  static SeriesGF sqrt_one_minus_y(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_.at(i); }

  SeriesGF& operator+=(const SeriesGF& o);
  SeriesGF& operator-=(const SeriesGF& o);
  SeriesGF& operator*=(const Rat& k);
  friend SeriesGF operator+(SeriesGF a, const SeriesGF& b) { return a += b; }
  friend SeriesGF operator-(SeriesGF a, const SeriesGF& b) { return a -= b; }
  friend SeriesGF operator*(SeriesGF a, const Rat& k) { return a *= k; }
  friend SeriesGF operator*(const SeriesGF& a, const SeriesGF& b);
  friend bool operator==(const SeriesGF& a, const SeriesGF& b) = default;

  /// 1/this; throws std::domain_error if the constant term is zero.
  SeriesGF reciprocal() const;
  /// this * y^k (truncated).
  SeriesGF shift(std::size_t k) const;
  /// this / y; throws std::domain_error unless the constant term is zero.
  /// The top coefficient becomes unknown and the order drops by one.
  SeriesGF div_by_y() const;
  SeriesGF pow(unsigned e) const;
  SeriesGF truncated(std::size_t order) const;

 private:
  std::vector<Rat> c_;
};

enum class SeriesExpr {
  inv_sqrt,          ///< (1-y)^(-1/2)
  inv,               ///< (1-y)^(-1)
  inv_three_halves,  ///< (1-y)^(-3/2)
  inv_square,        ///< (1-y)^(-2)
  a_plus_one,        ///< 2(1 - sqrt(1-y)) / (y sqrt(1-y))
  a_minus_one,       ///< (1 - sqrt(1-y))^2 / (y sqrt(1-y))
  f_first,           ///< (y+1) / (2(1-y)^(3/2)) - 1 / (2(1-y))
  f_second,          ///< (3-y) / (2(1-y)^2) - 3 / (2(1-y)^(3/2))
  // Parity parts of the second: named by the identities applied to the
  // outer and inner sum (0 -> A[0], 1 -> A[1], m1 -> A[-1]).
  part_0_0,   ///< y / (4(1-y)^2)
  part_0_1,   ///< y (1 - sqrt(1-y)) / (4(1-y)^2)
  part_1_m1,  ///< (1 - sqrt(1-y))^3 / (4(1-y)^2)
  part_1_1,   ///< (1 - sqrt(1-y))^2 / (4(1-y)^2)
  // parts of the first
  part_0,  ///< y / (2(1-y)^(3/2))
  part_1,  ///< (1 - sqrt(1-y)) / (2(1-y)^(3/2))
};

/// Expands the expression from sqrt(1-y) by series arithmetic.
SeriesGF series_expand(SeriesExpr e, std::size_t order);

/// M_r(h) / 2^n: the nested building-block sum, by dynamic programming over
/// the last index (O(r h^2)).
Rat nested_block_sum(long h, unsigned r);

/// A[0], A[1], A[-1] coefficient-wise up to y^order.
CheckReport identity_check(std::size_t order = 60);

/// F^(1), F^(2) and the four parity components of F^(2) against direct
/// nested sums and brute-force M_1, M_2, for L <= l_max.
CheckReport f1_f2_coefficient_check(long l_max = 10);

/// sum_{s<L} binom(2s, s)/4^s = 2L binom(2L, L)/4^L for L = 1..l_max.
CheckReport binomial_identity_check(long l_max = 100);

/// For random integer H of degree k <= k_max: [y^L] H/(1-y)^(k+1) is a
/// polynomial of degree <= k in L, and [y^L] H/(1-y)^(k+1/2) is
/// binom(2L, L)/4^L times one. Checked by exact fit for L <= l_max.
CheckReport coefficient_extraction_check(unsigned k_max = 4, long l_max = 30, std::uint64_t seed = 1);

/// F^(r) = P(y)/(1-y)^(1+r/2) + Q(y)/(1-y)^((1+r)/2) with deg P <= ceil(r/2),
/// deg Q <= floor(r/2): exact fit on leading coefficients, validated on the
/// rest up to y^l_max.
CheckReport partial_fraction_check(unsigned r_max = 4, long l_max = 30);

struct PartialFraction {
  RatPoly p;
  RatPoly q;
};

/// The fitted pair for one r; throws FitError if the fit fails validation.
PartialFraction partial_fraction_fit(unsigned r, long l_max = 30);

}  // namespace riffle
