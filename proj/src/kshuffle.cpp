#include "riffle/kshuffle.hpp"

#include <stdexcept>

namespace riffle {

namespace {

void check_args(long n, long c) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  if (c < 1) throw std::invalid_argument("sequence count must be at least 1");
}

}  // namespace

BigInt position_sequence_count(long n, long c, long i, long m) {
  check_args(n, c);
  if (i < 1 || i > n) throw std::invalid_argument("position outside 1..n");
  if (m < 1 || m > c) throw std::invalid_argument("sequence index outside 1..C");
  const long v = i / c;
  // With one sequence every card sits at its own position, and the guess
  // floor(i/1) + 1 = i + 1 never matches.
  if (c == 1) return 0;

  // Pull (C-m)^(i-1-v) (C-m+1)^(n-i-v) out of every term; what remains is
  //   sum_T binom(i-1, T) binom(n-i, v-T) p^T q^(v-T)
  // with p = m (C-m+1), q = (C-m)(m-1). Both exponents are nonnegative for
  // C >= 2 and i in the top half.
  const long e1 = i - 1 - v;
  const long e2 = n - i - v;
  if (e1 < 0 || e2 < 0) throw std::invalid_argument("position outside the top half");
  const BigInt p = BigInt(m) * (c - m + 1);
  const BigInt q = BigInt(c - m) * (m - 1);

  BigInt sum;
  if (q == 0) {
    // only T = v survives
    sum = binom(i - 1, v) * ipow(p, static_cast<unsigned long>(v));
  } else {
    BigInt term = binom(n - i, v) * ipow(q, static_cast<unsigned long>(v));
    sum = term;
    BigInt num, den;
    for (long t = 0; t < v; ++t) {
      // term_(t+1) / term_t = (i-1-t)(v-t) p / ((t+1)(n-i-v+t+1) q)
      num = BigInt(i - 1 - t) * (v - t) * p;
      den = BigInt(t + 1) * (n - i - v + t + 1) * q;
      term *= num;
      mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
      if (term == 0) break;
      sum += term;
    }
  }
  return sum * ipow(BigInt(c - m), static_cast<unsigned long>(e1)) *
         ipow(BigInt(c - m + 1), static_cast<unsigned long>(e2));
}

BigInt position_count(long n, long c, long i) {
  BigInt total = 0;
  for (long m = 1; m <= c; ++m) total += position_sequence_count(n, c, i, m);
  return total;
}

namespace {

Rat half_sum(long n, long c, long positions) {
  BigInt total = 0;
  for (long i = 1; i <= positions; ++i) total += position_count(n, c, i);
  return make_rat(total, ipow(BigInt(c), static_cast<unsigned long>(n)));
}

}  // namespace

Rat expected_top_half(long n, long c) {
  check_args(n, c);
  return half_sum(n, c, (n + 1) / 2);
}

Rat expected_bottom_half(long n, long c) {
  check_args(n, c);
  // Relabelling x -> n+1-x and reversing positions maps a C-sequence deck to
  // another one and carries bottom position n+1-i with guess n+1-g onto top
  // position i with guess g.
  return half_sum(n, c, n - (n + 1) / 2);
}

Rat expected_total(long n, long c) {
  check_args(n, c);
  const Rat top = expected_top_half(n, c);
  Rat total = top + (n % 2 == 0 ? top : expected_bottom_half(n, c));
  total.canonicalize();
  return total;
}

Decimal leading_term(long n, long c, unsigned digits) {
  check_args(n, c);
  if (c == 1) throw std::domain_error("leading term undefined for C = 1");
  const Decimal ratio = Decimal(make_rat(n, c - 1), digits) / Decimal::pi(digits);
  return Decimal::from_long(2, digits) * ratio.sqrt();
}

std::string mode_name(KShuffleMode m) {
  switch (m) {
    case KShuffleMode::exact: return "exact";
    case KShuffleMode::leading: return "leading";
    case KShuffleMode::simulate: return "simulate";
  }
  return "?";
}

KShuffleMode parse_mode(const std::string& s) {
  if (s == "exact") return KShuffleMode::exact;
  if (s == "leading") return KShuffleMode::leading;
  if (s == "simulate") return KShuffleMode::simulate;
  throw std::invalid_argument("unknown mode '" + s + "' (exact, leading, simulate)");
}

void KShuffleQuery::validate() const { check_args(n, c); }

}  // namespace riffle
