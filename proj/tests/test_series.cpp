#include "doctest.h"

#include "riffle/closedform.hpp"
#include "riffle/series.hpp"

using namespace riffle;

namespace {

void require_all(const CheckReport& rep) {
  for (const auto& item : rep.items) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.passed);
  }
  CHECK_FALSE(rep.items.empty());
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("binomial series of (1-y)^a") {
  const auto inv2 = SeriesGF::power_one_minus_y(12, Rat(-2));
  for (std::size_t k = 0; k <= 12; ++k) CHECK(inv2[k] == Rat(static_cast<long>(k) + 1));
  const auto w = SeriesGF::sqrt_one_minus_y(20);
  CHECK(w[1] == Rat(-1, 2));
  CHECK(w[2] == Rat(-1, 8));
  CHECK(w * w == SeriesGF::one_minus_y(20));
  const auto cube = SeriesGF::power_one_minus_y(6, Rat(3));
  CHECK(cube == SeriesGF(6, {Rat(1), Rat(-3), Rat(3), Rat(-1)}));
}

TEST_CASE("reciprocal, shift and division by y") {
  const auto s = SeriesGF::one_minus_y(8);
  const auto r = s.reciprocal();
  for (std::size_t k = 0; k <= 8; ++k) CHECK(r[k] == 1);
  CHECK(s * r == SeriesGF::constant(8, Rat(1)));
  const auto y2 = SeriesGF::constant(8, Rat(1)).shift(2);
  CHECK(y2[2] == 1);
  CHECK(y2.div_by_y().order() == 7);
  CHECK(y2.div_by_y()[1] == 1);
  CHECK_THROWS_AS(s.div_by_y(), std::domain_error);
  CHECK_THROWS_AS(SeriesGF(4).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(s + SeriesGF(3), std::invalid_argument);
}

TEST_CASE("nested sum dynamic programme matches brute force") {
  for (long h = 0; h <= 16; ++h)
    for (unsigned r = 0; r <= 4; ++r) {
      CAPTURE(h);
      CAPTURE(r);
      CHECK(nested_block_sum(h, r) == make_rat(m_r_bruteforce(h, r, h), pow2(static_cast<unsigned long>(h))));
    }
}

TEST_CASE("first two generating functions at small L") {
  const auto f1 = series_expand(SeriesExpr::f_first, 6);
  const auto f2 = series_expand(SeriesExpr::f_second, 6);
  CHECK(f1[0] == 0);
  CHECK(f2[0] == 0);
  // M_1(2)/4: tuples (1), (2) weigh 1/2 and 1/4
  CHECK(f1[1] == Rat(3, 4));
  CHECK(f2[1] == nested_block_sum(2, 2));
}

TEST_CASE("identities for the central binomial series") { require_all(identity_check(40)); }
TEST_CASE("F1 and F2 coefficients") { require_all(f1_f2_coefficient_check(14)); }
TEST_CASE("partial sums of central binomials") { require_all(binomial_identity_check(60)); }
TEST_CASE("coefficient extraction gives polynomials") { require_all(coefficient_extraction_check(4, 24, 7)); }
TEST_CASE("partial-fraction forms") {
  require_all(partial_fraction_check(4, 30));
  const auto pf1 = partial_fraction_fit(1);
  CHECK(pf1.p == RatPoly({Rat(1, 2), Rat(1, 2)}));
  CHECK(pf1.q == RatPoly({Rat(-1, 2)}));
  const auto pf2 = partial_fraction_fit(2);
  CHECK(pf2.p == RatPoly({Rat(3, 2), Rat(-1, 2)}));
  CHECK(pf2.q == RatPoly({Rat(-3, 2)}));
  CHECK_THROWS_AS(partial_fraction_fit(0), std::invalid_argument);
}

}
