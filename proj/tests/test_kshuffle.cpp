#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "riffle/kshuffle.hpp"
#include "riffle/moments.hpp"
#include "riffle/shuffle.hpp"

using namespace riffle;

TEST_SUITE("kshuffle") {

TEST_CASE("one sequence never scores") {
  for (long n = 1; n <= 8; ++n) {
    CHECK(expected_top_half(n, 1) == 0);
    CHECK(expected_total(n, 1) == 0);
  }
}

TEST_CASE("two sequences reduce to one shuffle") {
  CHECK(expected_total(4, 2) == make_rat(30, 16));
  for (long n = 1; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(expected_total(n, 2) == raw_moment(n, 1));
  }
}

TEST_CASE("brute-force word oracle") {
  struct Range {
    long c, n_max;
  };
  for (Range rg : {Range{2, 16}, Range{3, 9}, Range{4, 8}, Range{5, 6}, Range{8, 5}}) {
    for (long n = 1; n <= rg.n_max; ++n) {
      CAPTURE(rg.c);
      CAPTURE(n);
      CHECK(expected_total(n, rg.c) == oracle::moment(oracle::tally(n, rg.c), 1));
    }
  }
  CHECK(expected_total(6, 3) == gen_slow_c(ShuffleSpec::from_sequences(6, 3)).mean);
}

TEST_CASE("inner sums are probabilities") {
  for (long c : {2, 3, 4, 8})
    for (long n : {5L, 16L, 33L}) {
      const BigInt scale = ipow(BigInt(c), static_cast<unsigned long>(n - 1));
      for (long i = 1; i <= (n + 1) / 2; ++i)
        for (long m = 1; m <= c; ++m) {
          const BigInt t = position_sequence_count(n, c, i, m);
          CHECK(t >= 0);
          CHECK(t <= scale);
        }
    }
}

TEST_CASE("mirror consistency for even decks") {
  for (long c : {2, 3, 4, 8})
    for (long n = 2; n <= 40; n += 2) CHECK(expected_bottom_half(n, c) == expected_top_half(n, c));
}

TEST_CASE("more sequences, fewer hits") {
  for (long n : {32L, 64L, 100L}) {
    CHECK(expected_total(n, 4) < expected_total(n, 2));
    CHECK(expected_total(n, 8) < expected_total(n, 4));
  }
}

TEST_CASE("leading term") {
  CHECK_THROWS_AS(leading_term(10, 1, 30), std::domain_error);
  CHECK(leading_term(100, 2, 30).to_double() == doctest::Approx(2 * std::sqrt(100 / std::numbers::pi)).epsilon(1e-12));
  CHECK(leading_term(400, 4, 30).to_double() == doctest::Approx(2 * leading_term(100, 4, 30).to_double()).epsilon(1e-12));
}

TEST_CASE("leading term at ten thousand cards" * doctest::timeout(300)) {
  const double exact = expected_total(10000, 4).get_d();
  const double lead = leading_term(10000, 4, 30).to_double();
  CHECK(std::abs(lead - exact) / exact < 0.10);
}

TEST_CASE("argument checks") {
  CHECK_THROWS(expected_total(0, 2));
  CHECK_THROWS(expected_total(5, 0));
  CHECK_THROWS(position_sequence_count(5, 2, 6, 1));
  CHECK_THROWS(position_sequence_count(5, 2, 1, 3));
  CHECK(parse_mode("leading") == KShuffleMode::leading);
  CHECK_THROWS(parse_mode("fast"));
}

}
