#pragma once

// Closed forms for the one-shuffle moments.
//
// Y_i indicates a correct guess at top-half position i made by a card of the
// first sequence; Y = Y_1 + ... + Y_h. Counts C[.] are over all 2^n words.
// Half moments take the shape 2^(n-h) [P(L) binom(2L, L) + Q(L) 4^L] with
// h = 2L (even) or h = 2L - 1 (odd), and full moments are polynomials in the
// atom B = binom(2L, L) / 4^L plus a multiple of 1/2^n.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "riffle/core.hpp"
#include "riffle/decimal.hpp"

namespace riffle {

enum class Parity { even, odd };

std::string parity_name(Parity p);

/// C[Y_{i1} ... Y_{ir}] for non-decreasing indices in 1..n. Repeated indices
/// collapse (Y_i^2 = Y_i). Throws std::invalid_argument on a decrease or an
/// index outside 1..n; the empty product is 2^n.
BigInt building_block(std::span<const long> indices, long n);

/// C[Y_i] by the explicit double sum over top-half first-sequence length a
/// and bottom-half second-sequence length b, with h = ceil(n/2).
BigInt building_block_double_sum(long i, long n);

inline constexpr long kBruteForceMaxH = 24;
inline constexpr unsigned kBruteForceMaxR = 4;

/// M_r(h): sum of C[Y_{i1} ... Y_{ir}] over 1 <= i1 < ... < ir <= h.
/// GuardError beyond h = 24 or r = 4.
BigInt m_r_bruteforce(long h, unsigned r, long n);

/// Coefficient of M_m in C[Y^r] = sum_m S(r, m) m! M_m (number of ways to
/// map r ordered picks onto m distinct positions), m = 0..r.
std::vector<BigInt> partition_weights(unsigned r);

/// C[Y^r] for the top half of length h assembled from M_1..M_r.
BigInt partition_combine(long h, unsigned r, long n);

/// D^r F_A(q) at q = 1 for a half of length h (the count over 2^h words).
BigInt half_moment_scaled(long h, unsigned r);

struct ClosedHalfMoment {
  unsigned r = 0;
  Parity parity = Parity::even;
  RatPoly p;
  RatPoly q;
  std::vector<long> fit_points;
  std::vector<long> holdout_points;

  /// Half length for this parity at L.
  long half_at(long big_l) const { return parity == Parity::even ? 2 * big_l : 2 * big_l - 1; }
  /// P(L) binom(2L, L) + Q(L) 4^L, which equals D^r F_A(1) at h = half_at(L).
  Rat eval_scaled(long big_l) const;
  /// 2^(n-h) times eval_scaled.
  Rat eval_count(long big_l, long n) const;
};

/// Recovers P and Q by an exact fit at L = 2..2+N-1 (N unknowns), then
/// checks two further L values. Throws FitError if the system is singular
/// or a held-out value disagrees. `extra_degree` raises both degree bounds.
ClosedHalfMoment interpolate_half_moment(unsigned r, Parity parity, unsigned extra_degree = 0);

/// Cached fit (degree bounds as stated, no extra degree).
const ClosedHalfMoment& half_moment_fit(unsigned r, Parity parity);

/// Smallest n for which the E[X] closed form is exact.
inline constexpr long kClosedFormMinN = 4;

struct ClosedFormEx {
  Rat value;
  bool delegated = false;  ///< n below kClosedFormMinN, computed numerically
};

/// E[X] = (n + 1 - alpha/2) B - 1 + 6/2^n with n = 4L + alpha.
ClosedFormEx closed_form_ex(long n);

/// num(L) / (L+1)^den_power. Odd halves with h = 2L + 1 are expressed through
/// B(L+1) = B (2L+1) / (2L+2), which brings in the (L+1) denominators.
struct LFunction {
  RatPoly num;
  unsigned den_power = 0;

  static LFunction constant(const Rat& c) { return {RatPoly::constant(c), 0}; }
  bool is_zero() const { return num.is_zero(); }
  Rat eval(const Rat& big_l) const;
  /// Cancels common factors of (L+1).
  void reduce();
  std::string to_string() const;

  friend LFunction operator+(const LFunction& a, const LFunction& b);
  friend LFunction operator*(const LFunction& a, const LFunction& b);
  friend bool operator==(const LFunction& a, const LFunction& b) = default;
};

inline constexpr unsigned kMaxExpressionOrder = 8;

struct MomentExpression {
  unsigned r = 0;
  long alpha = 0;
  /// power j of B -> coefficient
  std::map<unsigned, LFunction> terms;
  /// coefficient of 1/2^n
  Rat tail;

  /// Exact value at n; throws std::invalid_argument unless n = 4L + alpha.
  Rat evaluate(long n) const;
  Decimal evaluate_decimal(long n, unsigned digits) const;
  /// e.g. "(4L+1)B - 1 + 6/2^n"
  std::string to_string() const;
};

/// E[X^r] for n = 4L + alpha, 1 <= r <= 8, alpha in {-1, 0, 1, 2}.
MomentExpression assemble_moment_expression(unsigned r, long alpha);

/// Cached form of assemble_moment_expression.
const MomentExpression& moment_expression(unsigned r, long alpha);

}  // namespace riffle
