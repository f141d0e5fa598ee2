#include "doctest.h"

#include "oracles.hpp"
#include "riffle/gf_fast.hpp"
#include "riffle/shuffle.hpp"

using namespace riffle;

TEST_SUITE("gf_fast") {

TEST_CASE("fast tier equals enumeration") {
  for (long n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(f_full_fast(n) == gen_slow(ShuffleSpec::from_shuffles(n, 1)));
  }
}

TEST_CASE("fastest tier equals fast tier from n = 4") {
  for (long n = kFastestMinN; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(f_full_fastest(n) == f_full_fast(n));
  }
}

TEST_CASE("factorised form misses small decks") {
  // below the threshold the product plus excess is not the distribution
  for (long n = 1; n < kFastestMinN; ++n) {
    CAPTURE(n);
    const long h = (n + 1) / 2;
    CHECK(excess_poly() + f_a(h) * f_b(n, h) != f_full_fast(n));
    auto routed = f_full_fastest_routed(n);
    CHECK(routed.routed_to_fast);
    CHECK(routed.poly == f_full_fast(n));
  }
  CHECK_FALSE(f_full_fastest_routed(4).routed_to_fast);
}

TEST_CASE("half-deck tables") {
  // G(0, 0) = 1; one card from the first sequence at position 1 is always hit
  CHECK(g_half_ns(0, 0) == GFPoly{1});
  CHECK(g_half_ns(1, 0) == GFPoly{0, 1});
  CHECK(g_half_ns(0, 1) == GFPoly{1});
  // F_A counts 2^h words
  for (long h = 0; h <= 30; ++h) CHECK(eval_at_one(f_a(h)) == pow2(static_cast<unsigned long>(h)));
  auto diag = g_half_diagonal(6, 3);
  REQUIRE(diag.size() == 7);
  for (long a = 0; a <= 6; ++a) CHECK(diag[static_cast<std::size_t>(a)] == g_half(a, 6 - a, 3));
  CHECK_THROWS(g_half(-1, 2, 1));
  CHECK_THROWS(f_full_fast(0));
}

TEST_CASE("excess polynomial") {
  CHECK(excess_poly() == GFPoly{0, 0, -2, -2, 4});
}

TEST_CASE("large deck totals") {
  const auto f = f_full_fastest(1000);
  CHECK(eval_at_one(f) == pow2(1000));
  for (const auto& c : f.coeffs()) CHECK(c >= 0);
}

}
