#pragma once

// Half-deck recurrences for the one-shuffle distribution.
//
// Fast tier: G(a1, a2, s, q) counts correct guesses in a top half made of a1
// cards from the first sequence and a2 from the second, the second starting
// at label s. Full deck: sum over (a, b) of a top factor times a mirrored
// bottom factor.
//
// Fastest tier: the s-free G(a1, a2, q) only tracks first-sequence hits, so
// the double sum factors into F_A(q) * F_B(q). The four near-identity
// outcomes it misses are restored by the excess polynomial 4q^4 - 2q^3 - 2q^2.

#include <optional>
#include <vector>

#include "riffle/core.hpp"

namespace riffle {

/// Smallest deck for which the factorised tier plus excess is exact. Found by
/// comparing tiers exhaustively; n = 1..3 disagree, n >= 4 agree.
inline constexpr long kFastestMinN = 4;

/// G(a, d - a, s, q) for all a = 0..d from one table fill. With no `s` the
/// s-free recurrence is used.
std::vector<GFPoly> g_half_diagonal(long d, std::optional<long> s);

GFPoly g_half(long a1, long a2, long s);
GFPoly g_half_ns(long a1, long a2);

/// F_n(q) by the double sum over (a, b).
GFPoly f_full_fast(long n);

/// F_A(q) = sum_a G(a, h - a, q).
GFPoly f_a(long h);
/// F_B(q) = sum_b G(b, n - h - b, q).
GFPoly f_b(long n, long h);

/// 4q^4 - 2q^3 - 2q^2.
GFPoly excess_poly();

struct FastestResult {
  GFPoly poly;
  bool routed_to_fast = false;  ///< n < kFastestMinN, computed by f_full_fast
};

FastestResult f_full_fastest_routed(long n);
GFPoly f_full_fastest(long n);

}  // namespace riffle
