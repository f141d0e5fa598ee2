#pragma once

// Expected number of correct guesses when the deck is a union of C increasing
// sequences (C = 2^k after k shuffles), over all C^n equally likely words.

#include <string>

#include "riffle/core.hpp"
#include "riffle/decimal.hpp"

namespace riffle {

/// Number of words in which top-half position i is guessed correctly by a
/// card of sequence m:
///   sum over T + S = floor(i/C) of
///   binom(i-1, T) m^T (C-m)^(i-1-T) * binom(n-i, S) (m-1)^S (C-m+1)^(n-i-S)
/// with 0^0 = 1.
BigInt position_sequence_count(long n, long c, long i, long m);

/// Sum of position_sequence_count over m = 1..C.
BigInt position_count(long n, long c, long i);

/// E_C[Y]: correct guesses in the top ceil(n/2) positions.
Rat expected_top_half(long n, long c);

/// E_C[Z]: bottom half, evaluated by mirroring it onto top-half positions
/// 1..n-h of the reflected deck.
Rat expected_bottom_half(long n, long c);

/// E_C[X] = E_C[Y] + E_C[Z]. For even n the halves coincide and the top is
/// reused.
Rat expected_total(long n, long c);

/// 2 sqrt(n / ((C-1) pi)); the error is O(1). Throws std::domain_error for C = 1.
Decimal leading_term(long n, long c, unsigned digits);

enum class KShuffleMode { exact, leading, simulate };

std::string mode_name(KShuffleMode m);
/// Throws std::invalid_argument for an unknown mode.
KShuffleMode parse_mode(const std::string& s);

struct KShuffleQuery {
  long n = 0;
  long c = 0;
  KShuffleMode mode = KShuffleMode::exact;

  /// Throws std::invalid_argument unless n >= 1 and C >= 1.
  void validate() const;
};

}  // namespace riffle
