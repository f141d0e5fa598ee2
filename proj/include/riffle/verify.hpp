#pragma once

// Invariant suites run by `riffle verify`. Each returns a report; failures are
// recorded in it, never thrown.

#include <string>
#include <vector>

#include "riffle/report.hpp"

namespace riffle {

/// gen_slow = f_full_fast for n = 1..slow_max, = f_full_fastest for
/// n = fastest_min..slow_max, F_n(1) = 2^n on every tier.
CheckReport verify_tiers(long slow_max = 14, long fastest_min = 6);

/// E[X] closed form against raw moments for 4 <= n <= n_max, the half-moment
/// fits with held-out values, degree bounds up to r = 8, partition
/// combination, assembled E[X^r] for every alpha.
CheckReport verify_closedform(long n_max = 200);

/// Identities, F^(1)/F^(2) coefficients, binomial partial sums, coefficient
/// extraction and partial-fraction forms.
CheckReport verify_series();

/// expected_total against one-shuffle moments and the word enumeration.
CheckReport verify_kshuffle();

/// "tiers", "closedform", "series", "kshuffle" or "all". Throws
/// std::invalid_argument for anything else.
std::vector<CheckReport> run_verify(const std::string& suite);

}  // namespace riffle
