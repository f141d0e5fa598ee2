#include "doctest.h"

#include <stdexcept>

#include "riffle/verify.hpp"

using namespace riffle;

namespace {

void require_all(const CheckReport& rep) {
  for (const auto& item : rep.items) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.passed);
  }
  CHECK(rep.passed());
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("tier suite covers n = 6..14 for the fastest tier") {
  const auto rep = verify_tiers();
  require_all(rep);
  REQUIRE(rep.items.size() == 3);
  CHECK(rep.items[1].detail == "n = 6..14");
}

TEST_CASE("closed-form suite") { require_all(verify_closedform(60)); }
TEST_CASE("series suite") { require_all(verify_series()); }
TEST_CASE("kshuffle suite") { require_all(verify_kshuffle()); }

TEST_CASE("suite selection") {
  CHECK(run_verify("tiers").size() == 1);
  CHECK(run_verify("tiers")[0].suite == "tiers");
  CHECK_THROWS_AS(run_verify("nope"), std::invalid_argument);
}

TEST_CASE("failures are counted, not thrown") {
  CheckReport rep;
  rep.add("a", true);
  rep.add("b", false, "why");
  CHECK(rep.failures() == 1);
  CHECK_FALSE(rep.passed());
}

}
