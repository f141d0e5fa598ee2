#include "riffle/closedform.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "riffle/gf_fast.hpp"
#include "riffle/linsolve.hpp"

namespace riffle {

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// ---------------------------------------------------------------------------
// Building blocks

BigInt building_block(std::span<const long> indices, long n) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  BigInt prod = 1;
  long prev = 0;
  for (long i : indices) {
    if (i < 1 || i > n) throw std::invalid_argument("index " + std::to_string(i) + " outside 1..n");
    if (i < prev) throw std::invalid_argument("indices must be non-decreasing");
    if (i == prev) continue;
    if (prev == 0)
      prod *= binom(i - 1, i / 2);
    else
      prod *= binom(i - prev - 1, i / 2 - prev / 2 - 1);
    prev = i;
  }
  return prod * pow2(static_cast<unsigned long>(n - prev));
}

BigInt building_block_double_sum(long i, long n) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  const long h = (n + 1) / 2;
  if (i < 1 || i > h) throw std::invalid_argument("index outside the top half");
  const BigInt lead = binom(i - 1, i / 2);
  BigInt total = 0;
  for (long a = 0; a <= h; ++a) {
    const BigInt top = binom(h - i, a - i / 2 - 1);
    if (top == 0) continue;
    for (long b = 0; b <= n - h; ++b) total += lead * top * binom(n - h, b);
  }
  return total;
}

namespace {

// Sums the product of block factors over strictly increasing tuples extending
// a prefix ending at `prev`.
void sum_tuples(long prev, unsigned left, long h, long n, const BigInt& acc, BigInt& total) {
  if (left == 0) {
    total += acc * pow2(static_cast<unsigned long>(n - prev));
    return;
  }
  for (long i = prev + 1; i <= h - static_cast<long>(left) + 1; ++i) {
    const BigInt f = prev == 0 ? binom(i - 1, i / 2) : binom(i - prev - 1, i / 2 - prev / 2 - 1);
    if (f == 0) continue;
    sum_tuples(i, left - 1, h, n, acc * f, total);
  }
}

}  // namespace

BigInt m_r_bruteforce(long h, unsigned r, long n) {
  if (h > kBruteForceMaxH || r > kBruteForceMaxR)
    throw GuardError("brute-force M_r refused: needs h <= " + std::to_string(kBruteForceMaxH) +
                     " and r <= " + std::to_string(kBruteForceMaxR));
  if (h < 0 || h > n) throw std::invalid_argument("half length outside 0..n");
  BigInt total = 0;
  sum_tuples(0, r, h, n, BigInt(1), total);
  return total;
}

std::vector<BigInt> partition_weights(unsigned r) {
  std::vector<BigInt> w(r + 1);
  for (unsigned m = 0; m <= r; ++m) {
    // surjections from r picks onto m positions
    BigInt s = 0;
    for (unsigned j = 0; j <= m; ++j) {
      BigInt t = binom(m, j) * ipow(BigInt(m - j), r);
      if (j % 2) s -= t; else s += t;
    }
    w[m] = s;
  }
  return w;
}

BigInt partition_combine(long h, unsigned r, long n) {
  const auto w = partition_weights(r);
  BigInt total = 0;
  for (unsigned m = 0; m <= r; ++m)
    if (w[m] != 0) total += w[m] * m_r_bruteforce(h, m, n);
  return total;
}

BigInt half_moment_scaled(long h, unsigned r) { return d_eval_at_one(f_a(h), r); }

// ---------------------------------------------------------------------------
// Interpolation

Rat ClosedHalfMoment::eval_scaled(long big_l) const {
  const Rat l(big_l);
  return p.eval(l) * Rat(binom(2 * big_l, big_l)) + q.eval(l) * Rat(ipow(BigInt(4), static_cast<unsigned long>(big_l)));
}

Rat ClosedHalfMoment::eval_count(long big_l, long n) const {
  const long h = half_at(big_l);
  if (h > n) throw std::invalid_argument("half longer than the deck");
  return eval_scaled(big_l) * Rat(pow2(static_cast<unsigned long>(n - h)));
}

ClosedHalfMoment interpolate_half_moment(unsigned r, Parity parity, unsigned extra_degree) {
  if (r < 1) throw std::invalid_argument("moment order must be at least 1");
  constexpr long kFirstL = 2;
  const unsigned dp = (r + 1) / 2 + extra_degree;
  const unsigned dq = r / 2 + extra_degree;
  const std::size_t unknowns = dp + dq + 2;

  ClosedHalfMoment out;
  out.r = r;
  out.parity = parity;
  for (std::size_t k = 0; k < unknowns; ++k) out.fit_points.push_back(kFirstL + static_cast<long>(k));
  out.holdout_points = {kFirstL + static_cast<long>(unknowns), kFirstL + static_cast<long>(unknowns) + 1};

  auto row_for = [&](long big_l) {
    std::vector<Rat> row;
    const BigInt b = binom(2 * big_l, big_l);
    const BigInt f = ipow(BigInt(4), static_cast<unsigned long>(big_l));
    BigInt lk = 1;
    for (unsigned k = 0; k <= dp; ++k, lk *= big_l) row.emplace_back(b * lk);
    lk = 1;
    for (unsigned k = 0; k <= dq; ++k, lk *= big_l) row.emplace_back(f * lk);
    return row;
  };

  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  for (long big_l : out.fit_points) {
    a.push_back(row_for(big_l));
    rhs.emplace_back(half_moment_scaled(out.half_at(big_l), r));
  }
  auto sol = solve_exact(a, rhs);
  if (!sol) {
    std::ostringstream os;
    os << "singular interpolation system for r=" << r << " (" << parity_name(parity) << " h), L = "
       << out.fit_points.front() << ".." << out.fit_points.back();
    throw FitError(os.str());
  }
  out.p = RatPoly(std::vector<Rat>(sol->begin(), sol->begin() + dp + 1));
  out.q = RatPoly(std::vector<Rat>(sol->begin() + dp + 1, sol->end()));

  for (long big_l : out.holdout_points) {
    const Rat want(half_moment_scaled(out.half_at(big_l), r));
    if (out.eval_scaled(big_l) != want) {
      std::ostringstream os;
      os << "fit for r=" << r << " (" << parity_name(parity) << " h) fails at held-out L=" << big_l;
      throw FitError(os.str());
    }
  }
  return out;
}

const ClosedHalfMoment& half_moment_fit(unsigned r, Parity parity) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, int>, ClosedHalfMoment> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(r, static_cast<int>(parity));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, interpolate_half_moment(r, parity)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// E[X]

namespace {

// B = binom(2L, L) / 4^L
Rat atom_b(long big_l) {
  return make_rat(binom(2 * big_l, big_l), ipow(BigInt(4), static_cast<unsigned long>(big_l)));
}

}  // namespace

ClosedFormEx closed_form_ex(long n) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  if (n < kClosedFormMinN) {
    const GFPoly f = f_full_fast(n);
    return {make_rat(d_eval_at_one(f, 1), eval_at_one(f)), true};
  }
  const long big_l = (n + 1) / 4;
  const long alpha = n - 4 * big_l;
  Rat v = (Rat(n + 1) - make_rat(alpha, 2)) * atom_b(big_l) - 1 + make_rat(6, pow2(static_cast<unsigned long>(n)));
  v.canonicalize();
  return {v, false};
}

// ---------------------------------------------------------------------------
// LFunction

namespace {

const RatPoly& l_plus_one() {
  static const RatPoly p({Rat(1), Rat(1)});
  return p;
}

RatPoly times_l_plus_one(RatPoly p, unsigned k) {
  for (unsigned i = 0; i < k; ++i) p = p * l_plus_one();
  return p;
}

}  // namespace

Rat LFunction::eval(const Rat& big_l) const {
  Rat d = 1;
  for (unsigned i = 0; i < den_power; ++i) d *= big_l + 1;
  return num.eval(big_l) / d;
}

void LFunction::reduce() {
  if (num.is_zero()) den_power = 0;
  while (den_power > 0 && num.eval(Rat(-1)) == 0) {
    num = num.divide_by_root(Rat(-1));
    --den_power;
  }
}

std::string LFunction::to_string() const {
  if (den_power == 0) return num.to_string('L', true);
  std::string s = "(" + num.to_string('L', true) + ")/(L+1)";
  if (den_power > 1) s += "^" + std::to_string(den_power);
  return s;
}

LFunction operator+(const LFunction& a, const LFunction& b) {
  const unsigned k = std::max(a.den_power, b.den_power);
  LFunction out{times_l_plus_one(a.num, k - a.den_power) + times_l_plus_one(b.num, k - b.den_power), k};
  out.reduce();
  return out;
}

LFunction operator*(const LFunction& a, const LFunction& b) {
  LFunction out{a.num * b.num, a.den_power + b.den_power};
  out.reduce();
  return out;
}

// ---------------------------------------------------------------------------
// Moment expressions

namespace {

// E[Y^i] for a half of length 2L + delta, as coefficient of B(L) and constant.
struct HalfExpr {
  LFunction b;
  LFunction c;
};

HalfExpr half_expectation(unsigned i, int delta) {
  if (i == 0) return {LFunction{}, LFunction::constant(1)};
  if (delta == 0) {
    const auto& fit = half_moment_fit(i, Parity::even);
    return {{fit.p, 0}, {fit.q, 0}};
  }
  const auto& fit = half_moment_fit(i, Parity::odd);
  if (delta == -1) return {{fit.p * Rat(2), 0}, {fit.q * Rat(2), 0}};
  // h = 2(L+1) - 1: B(L+1) = B (2L+1) / (2(L+1))
  LFunction b{fit.p.shifted(Rat(1)) * RatPoly({Rat(1), Rat(2)}), 1};
  b.reduce();
  return {b, {fit.q.shifted(Rat(1)) * Rat(2), 0}};
}

void add_term(std::map<unsigned, LFunction>& terms, unsigned power, const LFunction& f) {
  if (f.is_zero()) return;
  auto it = terms.find(power);
  if (it == terms.end()) {
    terms.emplace(power, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) terms.erase(it);
}

void check_alpha(long alpha) {
  if (alpha < -1 || alpha > 2) throw std::invalid_argument("alpha must be in {-1, 0, 1, 2}");
}

}  // namespace

MomentExpression assemble_moment_expression(unsigned r, long alpha) {
  if (r < 1 || r > kMaxExpressionOrder)
    throw std::invalid_argument("moment order must be in 1.." + std::to_string(kMaxExpressionOrder));
  check_alpha(alpha);
  // (top, bottom) half length offsets from 2L
  static const std::map<long, std::pair<int, int>> offsets = {
      {-1, {0, -1}}, {0, {0, 0}}, {1, {1, 0}}, {2, {1, 1}}};
  const auto [dt, db] = offsets.at(alpha);

  MomentExpression out;
  out.r = r;
  out.alpha = alpha;
  for (unsigned i = 0; i <= r; ++i) {
    const HalfExpr y = half_expectation(i, dt);
    const HalfExpr z = half_expectation(r - i, db);
    const LFunction w = LFunction::constant(Rat(binom(r, i)));
    add_term(out.terms, 2, w * y.b * z.b);
    add_term(out.terms, 1, w * (y.b * z.c + y.c * z.b));
    add_term(out.terms, 0, w * y.c * z.c);
  }
  out.tail = Rat(d_eval_at_one(excess_poly(), r));
  return out;
}

const MomentExpression& moment_expression(unsigned r, long alpha) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, long>, MomentExpression> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({r, alpha});
    if (it != cache.end()) return it->second;
  }
  MomentExpression e = assemble_moment_expression(r, alpha);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(r, alpha), std::move(e)).first->second;
}

Rat MomentExpression::evaluate(long n) const {
  if (n < 1 || (n - alpha) % 4 != 0)
    throw std::invalid_argument("n = " + std::to_string(n) + " is not of the form 4L + " + std::to_string(alpha));
  const long big_l = (n - alpha) / 4;
  const Rat l(big_l);
  const Rat b = atom_b(big_l);
  Rat total = tail / Rat(pow2(static_cast<unsigned long>(n)));
  for (const auto& [power, f] : terms) {
    Rat bp = 1;
    for (unsigned j = 0; j < power; ++j) bp *= b;
    total += f.eval(l) * bp;
  }
  total.canonicalize();
  return total;
}

Decimal MomentExpression::evaluate_decimal(long n, unsigned digits) const { return Decimal(evaluate(n), digits); }

std::string MomentExpression::to_string() const {
  std::string out;
  auto append = [&](bool negative, const std::string& body) {
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  };
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const unsigned power = it->first;
    LFunction f = it->second;
    std::string atom = power == 0 ? "" : (power == 1 ? "B" : "B^" + std::to_string(power));
    if (power == 0 && f.den_power == 0) {
      // plain polynomial; its own signs read correctly after the join
      const std::string s = f.num.to_string('L');
      if (s.front() == '-')
        append(true, s.substr(1));
      else
        append(false, s);
      continue;
    }
    const bool negative = f.num.leading() < 0;
    if (negative) f.num = -f.num;
    if (f.den_power == 0 && f.num.degree() == 0) {
      const Rat c = f.num.coeff(0);
      if (c == 1)
        append(negative, atom);
      else if (c.get_den() == 1)
        append(negative, riffle::to_string(c) + atom);
      else
        append(negative, "(" + riffle::to_string(c) + ")" + atom);
    } else {
      append(negative, "(" + f.to_string() + ")" + atom);
    }
  }
  if (tail != 0) append(tail < 0, riffle::to_string(abs(tail)) + "/2^n");
  return out.empty() ? "0" : out;
}

}  // namespace riffle
