#pragma once

// Moments of the number of correct guesses X after one shuffle.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riffle/core.hpp"
#include "riffle/decimal.hpp"

namespace riffle {

enum class Tier { slow, fast, fastest };

std::string tier_name(Tier t);
/// Throws std::invalid_argument for an unknown name.
Tier parse_tier(std::string_view s);

struct Generated {
  GFPoly poly;
  Tier requested = Tier::fastest;
  Tier used = Tier::fastest;
};

/// F_n(q) by the requested tier. The fastest tier hands n < 4 to the fast
/// tier and reports that in `used`.
Generated generate(long n, Tier tier);

/// E[X^r] from the distribution of the given tier.
Rat raw_moment(long n, unsigned r, Tier tier = Tier::fastest);
/// E[X^0..X^max_r] from one generating function.
std::vector<Rat> raw_moments(long n, unsigned max_r, Tier tier = Tier::fastest);

/// sum_i i^r a_i / sum_i a_i
Rat normalized_moment(const GFPoly& p, unsigned r);

/// e(r) = D^r(4q^4 - 2q^3 - 2q^2) at q = 1 = 4^(r+1) - 2(3^r + 2^r).
BigInt excess_e(unsigned r);

struct HalfMomentCounts {
  BigInt top;     ///< C[Y^r]  = 2^(n-h) D^r F_A(1)
  BigInt bottom;  ///< C[Z^r]  = 2^h D^r F_B(1)
};

HalfMomentCounts half_moment_numeric(long n, unsigned r);

/// E[X^r] = sum_i binom(r, i) E[Y^i] E[Z^(r-i)] + e(r)/2^n. Requires n >= 4.
Rat assemble_raw_from_halves(long n, unsigned r);

/// mu_r = E[(X - E[X])^r] from raw[0..R].
std::vector<Rat> central_from_raw(const std::vector<Rat>& raw);

/// Largest n whose moments are computed from the generating function when the
/// source is automatic; beyond it the closed-form expressions are used.
inline constexpr long kNumericMomentMaxN = 1000;

enum class MomentSource { automatic, numeric, closed_form };
std::string source_name(MomentSource s);

struct MomentReport {
  long n = 0;
  unsigned max_r = 0;
  unsigned precision = 0;
  MomentSource source = MomentSource::numeric;
  std::vector<Rat> raw;      ///< index r
  std::vector<Rat> central;  ///< index r
  /// mu_r / sigma^r; empty when the variance is zero
  std::vector<Decimal> standardized;
  bool standardized_defined() const { return !standardized.empty(); }
};

MomentReport central_and_standardized(long n, unsigned max_r, unsigned precision = 50,
                                      MomentSource source = MomentSource::automatic);

struct DistributionRow {
  long guesses;
  BigInt count;
  Rat probability;
};

struct DistributionTable {
  long n = 0;
  Tier requested = Tier::fastest;
  Tier used = Tier::fastest;
  BigInt outcomes;
  std::vector<DistributionRow> rows;
  Rat mean;
};

DistributionTable distribution_table(long n, Tier tier);

}  // namespace riffle
