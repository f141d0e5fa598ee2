// Acceptance runner: `riffle_acceptance N` checks criterion N and prints one
// PASS/FAIL line. Exit status 0 on pass, 1 on fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "riffle/closedform.hpp"
#include "riffle/gf_fast.hpp"
#include "riffle/kshuffle.hpp"
#include "riffle/moments.hpp"
#include "riffle/series.hpp"
#include "riffle/shuffle.hpp"

using namespace riffle;

namespace {

// Pinned limits.
constexpr double kC1Seconds = 1.0;
constexpr double kC2Seconds = 120.0;
constexpr double kC3Fastest1000Seconds = 120.0;
constexpr double kC3Fastest400Seconds = 10.0;
constexpr double kC7Tolerance = 1e-6;
constexpr double kC8Tolerance = 1e-3;
constexpr long kC8N = 12000;
constexpr unsigned kC8Digits = 50;
constexpr double kC9StandardErrors = 4.0;
constexpr std::uint64_t kC9Trials = 100000;
constexpr std::uint64_t kC9Seed = 20240501;

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

RatPoly lin(Rat a, Rat b) { return RatPoly{b, a}; }
RatPoly quad(Rat a, Rat b, Rat c) { return RatPoly{c, b, a}; }
RatPoly cub(Rat a, Rat b, Rat c, Rat d) { return RatPoly{d, c, b, a}; }
RatPoly con(Rat c) { return RatPoly::constant(c); }

Result criterion_1() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  const GFPoly f4 = gen_slow(ShuffleSpec::from_shuffles(4, 1));
  if (f4 != GFPoly({4, 4, 3, 0, 5})) res.fail("F_4 = " + f4.to_string());
  if (f4.to_string() != "4 + 4q + 3q^2 + 5q^4") res.fail("rendering " + f4.to_string());
  for (Tier t : {Tier::slow, Tier::fast, Tier::fastest}) {
    if (raw_moment(4, 1, t) != make_rat(30, 16)) res.fail("E[X] on " + tier_name(t));
    if (raw_moment(4, 2, t) != make_rat(96, 16)) res.fail("E[X^2] on " + tier_name(t));
  }
  const double s = seconds_since(t0);
  if (s >= kC1Seconds) res.fail("took " + fmt(s) + " s");
  if (res.ok) res.detail = "F_4, E[X] = 30/16, E[X^2] = 96/16 in " + fmt(s, 3) + " s";
  return res;
}

Result criterion_2() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  for (long n = 1; n <= 14; ++n) {
    const GFPoly slow = gen_slow(ShuffleSpec::from_shuffles(n, 1));
    const GFPoly fast = f_full_fast(n);
    const BigInt total = pow2(static_cast<unsigned long>(n));
    if (slow != fast) res.fail("slow != fast at n = " + std::to_string(n));
    if (eval_at_one(slow) != total || eval_at_one(fast) != total) res.fail("F_n(1) != 2^n at n = " + std::to_string(n));
    if (n >= 6) {
      const GFPoly fastest = f_full_fastest(n);
      if (slow != fastest) res.fail("slow != fastest at n = " + std::to_string(n));
      if (eval_at_one(fastest) != total) res.fail("fastest F_n(1) != 2^n at n = " + std::to_string(n));
    }
  }
  const double s = seconds_since(t0);
  if (s >= kC2Seconds) res.fail("took " + fmt(s) + " s");
  if (res.ok) res.detail = "n = 1..14 (fastest from 6) in " + fmt(s, 3) + " s";
  return res;
}

Result criterion_3() {
  Result res;
  auto timed = [](auto&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
  };
  GFPoly p1000;
  const double t1000 = timed([&] { p1000 = f_full_fastest(1000); });
  if (eval_at_one(p1000) != pow2(1000)) res.fail("fastest(1000) does not sum to 2^1000");
  if (t1000 > kC3Fastest1000Seconds) res.fail("fastest(1000) took " + fmt(t1000) + " s");
  const double t400 = timed([] { (void)f_full_fastest(400); });
  if (t400 > kC3Fastest400Seconds) res.fail("fastest(400) took " + fmt(t400) + " s");
  GFPoly a, b;
  const double t_fastest = timed([&] { a = f_full_fastest(200); });
  const double t_fast = timed([&] { b = f_full_fast(200); });
  if (a != b) res.fail("fast and fastest disagree at n = 200");
  if (!(t_fastest < t_fast)) res.fail("fastest(200) " + fmt(t_fastest) + " s not below fast(200) " + fmt(t_fast) + " s");
  const std::string times = "fastest(1000) " + fmt(t1000, 3) + " s, fastest(400) " + fmt(t400, 3) + " s, n = 200: fastest " +
                            fmt(t_fastest, 3) + " s vs fast " + fmt(t_fast, 3) + " s";
  res.detail = res.ok ? times : res.detail + "; " + times;
  return res;
}

// (n + 1 - alpha/2) B - 1 + 6/2^n with n = 4L + alpha, evaluated without any
// small-n fallback.
Rat ex_formula(long n) {
  const long big_l = (n + 1) / 4;
  const long alpha = n - 4 * big_l;
  const Rat b = make_rat(binom(2 * big_l, big_l), ipow(BigInt(4), static_cast<unsigned long>(big_l)));
  Rat v = (Rat(n + 1) - make_rat(alpha, 2)) * b - 1 + make_rat(6, pow2(static_cast<unsigned long>(n)));
  v.canonicalize();
  return v;
}

Result criterion_4() {
  Result res;
  for (long n = 8; n <= 200; ++n)
    if (ex_formula(n) != raw_moment(n, 1)) res.fail("closed form != E[X] at n = " + std::to_string(n));
  // smallest n0 with the formula exact for every n0 <= n <= 200
  long threshold = 201;
  for (long n = 200; n >= 1; --n) {
    const Tier t = n <= 14 ? Tier::slow : Tier::fastest;
    if (ex_formula(n) != raw_moment(n, 1, t)) break;
    threshold = n;
  }
  if (threshold != kClosedFormMinN) res.fail("threshold found at n = " + std::to_string(threshold));
  if (ex_formula(3) == raw_moment(3, 1, Tier::slow)) res.fail("formula unexpectedly holds at n = 3");
  if (closed_form_ex(4).value != raw_moment(4, 1, Tier::slow)) res.fail("library E[X] wrong at n = 4");
  if (res.ok) res.detail = "exact for 8 <= n <= 200; validity threshold n >= " + std::to_string(threshold) + " (fails at 3)";
  return res;
}

Result criterion_5() {
  Result res;
  struct Want {
    unsigned r;
    Parity parity;
    RatPoly p, q;
  };
  const Want wants[] = {
      {1, Parity::even, lin(2, Rat(1, 2)), con(Rat(-1, 2))},
      {2, Parity::even, -lin(4, Rat(5, 2)), lin(2, Rat(5, 2))},
      {3, Parity::even, quad(8, 24, Rat(19, 2)), -lin(9, Rat(19, 2))},
      {1, Parity::odd, lin(1, 0), con(Rat(-1, 4))},
      {2, Parity::odd, -lin(2, 1), lin(1, Rat(3, 4))},
      {3, Parity::odd, quad(4, 9, 3), -lin(Rat(9, 2), Rat(13, 4))},
  };
  for (const auto& w : wants) {
    const std::string tag = "r = " + std::to_string(w.r) + " " + parity_name(w.parity);
    try {
      const auto fit = interpolate_half_moment(w.r, w.parity);
      if (fit.p != w.p || fit.q != w.q) res.fail(tag + ": P = " + fit.p.to_string() + ", Q = " + fit.q.to_string());
    } catch (const FitError& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  for (unsigned r = 1; r <= 8; ++r)
    for (Parity par : {Parity::even, Parity::odd}) {
      try {
        const auto fit = interpolate_half_moment(r, par);
        if (fit.p.degree() > static_cast<long>((r + 1) / 2) || fit.q.degree() > static_cast<long>(r / 2))
          res.fail("degree bound broken at r = " + std::to_string(r));
      } catch (const FitError& e) {
        res.fail("r = " + std::to_string(r) + ": " + e.what());
      }
    }
  if (res.ok) res.detail = "six reference fits exact with held-out checks; degree bounds hold for r = 1..8";
  return res;
}

Result criterion_6() {
  Result res;
  struct Row {
    RatPoly b2, b1, b0;
    long tail;
  };
  const RatPoly l41 = lin(4, 1);
  const Row rows[] = {
      {RatPoly{}, l41, con(-1), 6},
      {l41 * l41 * Rat(1, 2), lin(2, 1) * Rat(-6), lin(4, Rat(11, 2)), 38},
      {lin(8, 5) * l41 * Rat(-3, 2), quad(20, 48, 17) * Rat(2), lin(-24, Rat(-53, 2)), 186},
      {cub(256, 1024, 736, 151) * Rat(1, 2), quad(50, 94, 33) * Rat(-8), quad(48, 232, Rat(377, 2)), 830},
      {cub(256, 736, 508, 101) * Rat(-15, 2), cub(344, 2558, 3610, 1163) * Rat(2), quad(-720, -2280, Rat(-3137, 2)), 3546},
  };
  for (unsigned r = 1; r <= 5; ++r) {
    const auto& e = moment_expression(r, 0);
    const Row& w = rows[r - 1];
    auto term = [&](unsigned j) { return e.terms.count(j) ? e.terms.at(j) : LFunction{}; };
    const bool same = term(2) == LFunction{w.b2, 0} && term(1) == LFunction{w.b1, 0} && term(0) == LFunction{w.b0, 0} &&
                      e.tail == w.tail && (e.terms.empty() || e.terms.rbegin()->first <= 2);
    if (!same) res.fail("reference list differs at r = " + std::to_string(r) + ": " + e.to_string());
  }
  for (unsigned r = 1; r <= 5; ++r)
    for (long big_l = 2; big_l <= 25; ++big_l)
      if (moment_expression(r, 0).evaluate(4 * big_l) != raw_moment(4 * big_l, r))
        res.fail("alpha = 0, r = " + std::to_string(r) + ", L = " + std::to_string(big_l));
  for (long n = 10; n <= 100; ++n) {
    const long alpha = n - 4 * ((n + 1) / 4);
    if (alpha == 0) continue;
    for (unsigned r = 1; r <= 5; ++r)
      if (moment_expression(r, alpha).evaluate(n) != raw_moment(n, r))
        res.fail("alpha = " + std::to_string(alpha) + ", r = " + std::to_string(r) + ", n = " + std::to_string(n));
  }
  if (res.ok) res.detail = "r = 1..5 term-by-term; exact for L = 2..25 and 10 <= n <= 100, all alpha";
  return res;
}

Result criterion_7() {
  Result res;
  const long big_l = 15;
  const auto rep = central_and_standardized(4 * big_l, 4, 50);
  const Rat b = make_rat(binom(2 * big_l, big_l), ipow(BigInt(4), static_cast<unsigned long>(big_l)));
  const Rat l(big_l);
  const Rat m2 = -(4 * l + 1) * (4 * l + 1) / 2 * b * b - 4 * (l + 1) * b + 4 * l + Rat(9, 2);
  const Rat m3 = (4 * l + 1) * (4 * l + 1) * (4 * l + 1) / 2 * b * b * b + 6 * (l + 1) * (4 * l + 1) * b * b -
                 (8 * l * l - 6 * l - Rat(11, 2)) * b - 12 * (l + 1);
  const Rat m4 = -(128 * l * l * l + 320 * l * l + 128 * l + Rat(1, 2)) * b * b - (48 * l * l + 184 * l + 112) * b +
                 48 * l * l + 160 * l + Rat(225, 2);
  const Rat asymptotic[] = {m2, m3, m4};
  double worst = 0;
  for (unsigned r = 2; r <= 4; ++r) {
    const double d = Rat(abs(rep.central[r] - asymptotic[r - 2])).get_d();
    worst = std::max(worst, d);
    if (!(d < kC7Tolerance)) res.fail("central moment " + std::to_string(r) + " off by " + fmt(d));
  }
  for (long n = 1; n <= 400; ++n)
    if (central_and_standardized(n, 1).central[1] != 0) res.fail("E[X - mu] != 0 at n = " + std::to_string(n));
  for (long n : {1001L, 2000L, 12000L})
    if (central_and_standardized(n, 1).central[1] != 0) res.fail("E[X - mu] != 0 at n = " + std::to_string(n));
  if (res.ok) res.detail = "L = 15 max deviation " + fmt(worst, 3) + "; E[X - mu] = 0 for n = 1..400, 1001, 2000, 12000";
  return res;
}

Result criterion_8() {
  Result res;
  const auto rep = central_and_standardized(kC8N, 4, kC8Digits);
  const Decimal pi = Decimal::pi(kC8Digits);
  const Decimal pm2 = pi - Decimal::from_long(2, kC8Digits);
  const Decimal skew = (Decimal::from_long(4, kC8Digits) - pi) / pm2.pow_half(3);
  const Decimal kurt = (Decimal::from_long(3, kC8Digits) * pi - Decimal::from_long(8, kC8Digits)) * pi / pm2.pow(2);
  const double d3 = (rep.standardized[3] - skew).abs().to_double();
  const double d4 = (rep.standardized[4] - kurt).abs().to_double();
  const std::string vals = "n = " + std::to_string(kC8N) + ": skewness " + fmt(rep.standardized[3].to_double()) + " vs " +
                           fmt(skew.to_double()) + " (off " + fmt(d3, 3) + "), kurtosis " +
                           fmt(rep.standardized[4].to_double()) + " vs " + fmt(kurt.to_double()) + " (off " + fmt(d4, 3) + ")";
  if (!(d3 <= kC8Tolerance) || !(d4 <= kC8Tolerance)) res.fail(vals);
  res.detail = vals;
  return res;
}

Result criterion_9() {
  Result res;
  for (long n = 1; n <= 100; ++n)
    if (expected_total(n, 2) != raw_moment(n, 1)) res.fail("C = 2 mismatch at n = " + std::to_string(n));
  struct Range {
    long c, n_max;
  };
  for (Range rg : {Range{2, 20}, Range{3, 12}, Range{4, 10}})
    for (long n = 1; n <= rg.n_max; ++n)
      if (expected_total(n, rg.c) != oracle::moment(oracle::tally(n, rg.c), 1))
        res.fail("brute force mismatch at C = " + std::to_string(rg.c) + ", n = " + std::to_string(n));
  const long n = 64;
  const long c = 4;  // k = 2
  const SampleReport s = gsr_sample(ShuffleSpec::from_shuffles(n, 2), kC9Trials, kC9Seed);
  const double exact = Rat(expected_total(n, c)).get_d();
  const double dev = std::fabs(Rat(s.mean).get_d() - exact);
  const std::string mc = "Monte Carlo mean " + fmt(Rat(s.mean).get_d()) + " vs exact " + fmt(exact) + " (" +
                         fmt(dev / s.standard_error, 3) + " SE)";
  if (!(dev <= kC9StandardErrors * s.standard_error)) res.fail(mc);
  if (res.ok) res.detail = "exact checks pass; " + mc;
  return res;
}

Result criterion_10() {
  Result res;
  for (long h = 1; h <= 10; ++h)
    for (unsigned r = 1; r <= 4; ++r)
      for (long n : {2 * h - 1, 2 * h}) {
        if (n < 1) continue;
        const BigInt want = half_moment_numeric(n, r).top;
        if (partition_combine(h, r, n) != want)
          res.fail("h = " + std::to_string(h) + ", r = " + std::to_string(r) + ", n = " + std::to_string(n));
      }
  if (res.ok) res.detail = "partition combination = C[Y^r] for h <= 10, r <= 4";
  return res;
}

Result criterion_11() {
  Result res;
  CheckReport all;
  all.append(identity_check(60));
  all.append(f1_f2_coefficient_check(10));
  all.append(binomial_identity_check(100));
  all.append(coefficient_extraction_check(4, 30));
  all.append(partial_fraction_check(2, 30));
  for (const auto& i : all.items)
    if (!i.passed) res.fail(i.name + " (" + i.detail + ")");
  if (res.ok) res.detail = std::to_string(all.items.size()) + " exact series checks";
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Result()>> criteria = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},   {5, criterion_5},   {6, criterion_6},
      {7, criterion_7}, {8, criterion_8}, {9, criterion_9}, {10, criterion_10}, {11, criterion_11},
  };
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s CRITERION\n", argv[0]);
    return 2;
  }
  const int id = std::atoi(argv[1]);
  const auto it = criteria.find(id);
  if (it == criteria.end()) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  Result r;
  try {
    r = it->second();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s: %s\n", id, r.ok ? "PASS" : "FAIL", r.detail.c_str());
  return r.ok ? 0 : 1;
}
