#include "riffle/verify.hpp"

#include <stdexcept>

#include "riffle/closedform.hpp"
#include "riffle/gf_fast.hpp"
#include "riffle/kshuffle.hpp"
#include "riffle/moments.hpp"
#include "riffle/series.hpp"
#include "riffle/shuffle.hpp"

namespace riffle {

namespace {

std::string span_detail(const char* var, long lo, long hi, long bad) {
  if (bad < 0) return std::string(var) + " = " + std::to_string(lo) + ".." + std::to_string(hi);
  return "mismatch at " + std::string(var) + " = " + std::to_string(bad);
}

}  // namespace

CheckReport verify_tiers(long slow_max, long fastest_min) {
  CheckReport rep;
  rep.suite = "tiers";
  long bad_fast = -1, bad_fastest = -1, bad_sum = -1;
  for (long n = 1; n <= slow_max; ++n) {
    const GFPoly slow = gen_slow(ShuffleSpec::from_shuffles(n, 1));
    const GFPoly fast = f_full_fast(n);
    const BigInt total = pow2(static_cast<unsigned long>(n));
    if (bad_fast < 0 && slow != fast) bad_fast = n;
    if (bad_sum < 0 && (eval_at_one(slow) != total || eval_at_one(fast) != total)) bad_sum = n;
    if (n >= fastest_min) {
      const GFPoly fastest = f_full_fastest(n);
      if (bad_fastest < 0 && slow != fastest) bad_fastest = n;
      if (bad_sum < 0 && eval_at_one(fastest) != total) bad_sum = n;
    }
  }
  rep.add("slow = fast", bad_fast < 0, span_detail("n", 1, slow_max, bad_fast));
  rep.add("slow = fastest", bad_fastest < 0, span_detail("n", fastest_min, slow_max, bad_fastest));
  rep.add("F_n(1) = 2^n", bad_sum < 0, span_detail("n", 1, slow_max, bad_sum));
  return rep;
}

CheckReport verify_closedform(long n_max) {
  CheckReport rep;
  rep.suite = "closedform";

  long bad = -1;
  for (long n = kClosedFormMinN; n <= n_max && bad < 0; ++n)
    if (closed_form_ex(n).value != raw_moment(n, 1)) bad = n;
  rep.add("closed-form E[X] = raw moment", bad < 0, span_detail("n", kClosedFormMinN, n_max, bad));

  for (unsigned r = 1; r <= kMaxExpressionOrder; ++r) {
    for (Parity par : {Parity::even, Parity::odd}) {
      const std::string name = "half moment fit r = " + std::to_string(r) + ", " + parity_name(par);
      try {
        const auto& fit = half_moment_fit(r, par);
        const bool deg = fit.p.degree() <= static_cast<long>((r + 1) / 2) && fit.q.degree() <= static_cast<long>(r / 2);
        rep.add(name, deg, "P(L) = " + fit.p.to_string() + ", Q(L) = " + fit.q.to_string());
      } catch (const FitError& e) {
        rep.add(name, false, e.what());
      }
    }
  }

  bad = -1;
  for (long h = 1; h <= 10 && bad < 0; ++h)
    for (unsigned r = 1; r <= 4; ++r)
      if (partition_combine(h, r, h) != half_moment_scaled(h, r)) bad = h;
  rep.add("partition combination = half moments", bad < 0, span_detail("h", 1, 10, bad));

  for (long alpha : {-1L, 0L, 1L, 2L}) {
    bad = -1;
    const long lo = 10, hi = 100;
    for (unsigned r = 1; r <= 5 && bad < 0; ++r) {
      const auto& expr = moment_expression(r, alpha);
      for (long n = lo; n <= hi && bad < 0; ++n)
        if ((n - alpha) % 4 == 0 && expr.evaluate(n) != raw_moment(n, r)) bad = n;
    }
    rep.add("assembled E[X^r], r <= 5, alpha = " + std::to_string(alpha), bad < 0, span_detail("n", lo, hi, bad));
  }
  return rep;
}

CheckReport verify_series() {
  CheckReport rep;
  rep.suite = "series";
  rep.append(identity_check(60));
  rep.append(f1_f2_coefficient_check(10));
  rep.append(binomial_identity_check(100));
  rep.append(coefficient_extraction_check(4, 30));
  rep.append(partial_fraction_check(4, 30));
  return rep;
}

CheckReport verify_kshuffle() {
  CheckReport rep;
  rep.suite = "kshuffle";
  long bad = -1;
  for (long n = 1; n <= 100 && bad < 0; ++n)
    if (expected_total(n, 2) != raw_moment(n, 1)) bad = n;
  rep.add("C = 2 equals one-shuffle E[X]", bad < 0, span_detail("n", 1, 100, bad));

  struct Range {
    long c, n_max;
  };
  for (Range rg : {Range{2, 20}, Range{3, 12}, Range{4, 10}}) {
    bad = -1;
    for (long n = 1; n <= rg.n_max && bad < 0; ++n)
      if (expected_total(n, rg.c) != gen_slow_c(ShuffleSpec::from_sequences(n, rg.c)).mean) bad = n;
    rep.add("C = " + std::to_string(rg.c) + " equals word enumeration", bad < 0, span_detail("n", 1, rg.n_max, bad));
  }
  return rep;
}

std::vector<CheckReport> run_verify(const std::string& suite) {
  if (suite == "tiers") return {verify_tiers()};
  if (suite == "closedform") return {verify_closedform()};
  if (suite == "series") return {verify_series()};
  if (suite == "kshuffle") return {verify_kshuffle()};
  if (suite == "all") return {verify_tiers(), verify_closedform(), verify_series(), verify_kshuffle()};
  throw std::invalid_argument("unknown suite '" + suite + "' (all, tiers, closedform, series, kshuffle)");
}

}  // namespace riffle
