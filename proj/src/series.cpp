#include "riffle/series.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "riffle/closedform.hpp"
#include "riffle/linsolve.hpp"

namespace riffle {

SeriesGF::SeriesGF(std::size_t order) : c_(order + 1) {}

SeriesGF::SeriesGF(std::size_t order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

SeriesGF SeriesGF::constant(std::size_t order, const Rat& c) {
  SeriesGF s(order);
  s.c_[0] = c;
  return s;
}

SeriesGF SeriesGF::one_minus_y(std::size_t order) {
  SeriesGF s(order);
  s.c_[0] = 1;
  if (order >= 1) s.c_[1] = -1;
  return s;
}

SeriesGF SeriesGF::power_one_minus_y(std::size_t order, const Rat& a) {
  SeriesGF s(order);
  s.c_[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    s.c_[k] = s.c_[k - 1] * (Rat(static_cast<long>(k) - 1) - a) / Rat(static_cast<long>(k));
    s.c_[k].canonicalize();
  }
  return s;
}

SeriesGF SeriesGF::sqrt_one_minus_y(std::size_t order) { return power_one_minus_y(order, Rat(1, 2)); }

SeriesGF& SeriesGF::operator+=(const SeriesGF& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SeriesGF& SeriesGF::operator-=(const SeriesGF& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SeriesGF& SeriesGF::operator*=(const Rat& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

SeriesGF operator*(const SeriesGF& a, const SeriesGF& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  SeriesGF out(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

SeriesGF SeriesGF::reciprocal() const {
  if (c_[0] == 0) throw std::domain_error("series has no reciprocal: zero constant term");
  SeriesGF out(order());
  out.c_[0] = 1 / c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
    out.c_[k] = -acc / c_[0];
  }
  return out;
}

SeriesGF SeriesGF::shift(std::size_t k) const {
  SeriesGF out(order());
  for (std::size_t i = 0; i + k < c_.size(); ++i) out.c_[i + k] = c_[i];
  return out;
}

SeriesGF SeriesGF::div_by_y() const {
  if (c_[0] != 0) throw std::domain_error("series not divisible by y");
  if (order() == 0) throw std::domain_error("series too short to divide by y");
  return SeriesGF(order() - 1, std::vector<Rat>(c_.begin() + 1, c_.end()));
}

SeriesGF SeriesGF::pow(unsigned e) const {
  SeriesGF out = constant(order(), Rat(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

SeriesGF SeriesGF::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return SeriesGF(order, std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

SeriesGF series_expand(SeriesExpr e, std::size_t order) {
  // one spare coefficient for the divisions by y
  const std::size_t n = order + 1;
  const SeriesGF w = SeriesGF::sqrt_one_minus_y(n);
  const SeriesGF one = SeriesGF::constant(n, Rat(1));
  const SeriesGF y = one.shift(1);
  const SeriesGF inv_w = w.reciprocal();
  const SeriesGF inv = SeriesGF::one_minus_y(n).reciprocal();
  const SeriesGF inv_32 = inv * inv_w;
  const SeriesGF inv_2 = inv * inv;
  const SeriesGF u = one - w;  // 1 - sqrt(1-y)

  SeriesGF out(n);
  switch (e) {
    case SeriesExpr::inv_sqrt: out = inv_w; break;
    case SeriesExpr::inv: out = inv; break;
    case SeriesExpr::inv_three_halves: out = inv_32; break;
    case SeriesExpr::inv_square: out = inv_2; break;
    case SeriesExpr::a_plus_one: return (u * inv_w * Rat(2)).div_by_y().truncated(order);
    case SeriesExpr::a_minus_one: return (u * u * inv_w).div_by_y().truncated(order);
    case SeriesExpr::f_first: out = (y + one) * inv_32 * Rat(1, 2) - inv * Rat(1, 2); break;
    case SeriesExpr::f_second: out = (one * Rat(3) - y) * inv_2 * Rat(1, 2) - inv_32 * Rat(3, 2); break;
    case SeriesExpr::part_0_0: out = y * inv_2 * Rat(1, 4); break;
    case SeriesExpr::part_0_1: out = y * u * inv_2 * Rat(1, 4); break;
    case SeriesExpr::part_1_m1: out = u.pow(3) * inv_2 * Rat(1, 4); break;
    case SeriesExpr::part_1_1: out = u.pow(2) * inv_2 * Rat(1, 4); break;
    case SeriesExpr::part_0: out = y * inv_32 * Rat(1, 2); break;
    case SeriesExpr::part_1: out = u * inv_32 * Rat(1, 2); break;
  }
  return out.truncated(order);
}

Rat nested_block_sum(long h, unsigned r) {
  if (h < 0) throw std::invalid_argument("half length must be nonnegative");
  if (r == 0) return 1;
  // g[j]: sum over index tuples of length k ending at j of the block factors
  std::vector<BigInt> g(static_cast<std::size_t>(h) + 1, 0);
  for (long j = 1; j <= h; ++j) g[static_cast<std::size_t>(j)] = binom(j - 1, j / 2);
  for (unsigned k = 2; k <= r; ++k) {
    std::vector<BigInt> next(g.size(), 0);
    for (long j = 1; j <= h; ++j)
      for (long i = 1; i < j; ++i)
        if (g[static_cast<std::size_t>(i)] != 0)
          next[static_cast<std::size_t>(j)] += g[static_cast<std::size_t>(i)] * binom(j - i - 1, j / 2 - i / 2 - 1);
    g = std::move(next);
  }
  BigInt total = 0;
  for (long j = 1; j <= h; ++j) total += g[static_cast<std::size_t>(j)] * pow2(static_cast<unsigned long>(h - j));
  return make_rat(total, pow2(static_cast<unsigned long>(h)));
}

// ---------------------------------------------------------------------------
// Checks

namespace {

Rat central_ratio(long s) { return make_rat(binom(2 * s, s), ipow(BigInt(4), static_cast<unsigned long>(s))); }

// First index where the series disagrees with want(i), or -1.
template <class F>
long first_mismatch(const SeriesGF& s, F want) {
  for (std::size_t i = 0; i <= s.order(); ++i)
    if (s[i] != want(static_cast<long>(i))) return static_cast<long>(i);
  return -1;
}

std::string range_detail(const char* var, long hi, long bad) {
  std::ostringstream os;
  if (bad < 0)
    os << var << " = 0.." << hi;
  else
    os << "mismatch at " << var << " = " << bad;
  return os.str();
}

Rat inv4(long t) { return make_rat(1, ipow(BigInt(4), static_cast<unsigned long>(t))); }

// The four parity parts of M_2(2L)/2^n as nested sums over s <= t.
Rat direct_part(int which, long big_l) {
  Rat total = 0;
  for (long s = 0; s <= big_l - 1; ++s) {
    const long t_hi = which == 0 ? big_l - 1 : big_l - 2;
    for (long t = s; t <= t_hi; ++t) {
      switch (which) {
        case 0: total += Rat(binom(2 * s, s) * binom(2 * t - 2 * s, t - s)) * inv4(t) / 4; break;
        case 1: total += Rat(binom(2 * s, s) * binom(2 * t - 2 * s + 1, t - s)) * inv4(t) / 8; break;
        case 2: total += Rat(binom(2 * s + 1, s) * binom(2 * t - 2 * s, t - s - 1)) * inv4(t) / 8; break;
        default: total += Rat(binom(2 * s + 1, s) * binom(2 * t - 2 * s + 1, t - s)) * inv4(t) / 16; break;
      }
    }
  }
  total.canonicalize();
  return total;
}

// The two parity parts of M_1(2L)/2^n.
Rat direct_first_part(int which, long big_l) {
  Rat total = 0;
  for (long s = 0; s <= big_l - 1; ++s)
    if (which == 0)
      total += Rat(binom(2 * s, s)) * inv4(s) / 2;
    else
      total += Rat(binom(2 * s + 1, s)) * inv4(s + 1);
  total.canonicalize();
  return total;
}

// Exact polynomial through (x_j, y_j), j < degree + 1.
RatPoly fit_poly(const std::vector<long>& xs, const std::vector<Rat>& ys, unsigned degree) {
  const std::size_t m = degree + 1;
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
  std::vector<Rat> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < m; ++j, p *= xs[i]) a[i][j] = Rat(p);
    b[i] = ys[i];
  }
  auto sol = solve_exact(a, b);
  if (!sol) throw FitError("singular Vandermonde system");
  return RatPoly(*sol);
}

}  // namespace

CheckReport identity_check(std::size_t order) {
  CheckReport rep;
  rep.suite = "series";
  const long hi = static_cast<long>(order);
  long bad = first_mismatch(series_expand(SeriesExpr::inv_sqrt, order), central_ratio);
  rep.add("identity A[0]", bad < 0, range_detail("s", hi, bad));
  bad = first_mismatch(series_expand(SeriesExpr::a_plus_one, order),
                       [](long s) { return make_rat(binom(2 * s + 1, s), ipow(BigInt(4), static_cast<unsigned long>(s))); });
  rep.add("identity A[1]", bad < 0, range_detail("s", hi, bad));
  bad = first_mismatch(series_expand(SeriesExpr::a_minus_one, order),
                       [](long s) { return make_rat(binom(2 * s, s - 1), ipow(BigInt(4), static_cast<unsigned long>(s))); });
  rep.add("identity A[-1]", bad < 0, range_detail("s", hi, bad));
  return rep;
}

CheckReport f1_f2_coefficient_check(long l_max) {
  if (l_max < 1) throw std::invalid_argument("l_max must be at least 1");
  CheckReport rep;
  rep.suite = "series";
  const auto order = static_cast<std::size_t>(l_max);

  // brute-force M_r where the guard allows, dynamic programming beyond
  auto m_scaled = [](long big_l, unsigned r) {
    const long h = 2 * big_l;
    if (h <= kBruteForceMaxH) return make_rat(m_r_bruteforce(h, r, h), pow2(static_cast<unsigned long>(h)));
    return nested_block_sum(h, r);
  };

  const SeriesGF f1 = series_expand(SeriesExpr::f_first, order);
  const SeriesGF f2 = series_expand(SeriesExpr::f_second, order);
  long bad = first_mismatch(f1, [&](long l) { return m_scaled(l, 1); });
  rep.add("F1 coefficients equal M_1(2L)/2^n", bad < 0, range_detail("L", l_max, bad));
  bad = first_mismatch(f2, [&](long l) { return m_scaled(l, 2); });
  rep.add("F2 coefficients equal M_2(2L)/2^n", bad < 0, range_detail("L", l_max, bad));
  bad = first_mismatch(f1, [&](long l) { return nested_block_sum(2 * l, 1); });
  rep.add("F1 coefficients equal the nested sum", bad < 0, range_detail("L", l_max, bad));
  bad = first_mismatch(f2, [&](long l) { return nested_block_sum(2 * l, 2); });
  rep.add("F2 coefficients equal the nested sum", bad < 0, range_detail("L", l_max, bad));

  const SeriesExpr first_parts[] = {SeriesExpr::part_0, SeriesExpr::part_1};
  const char* first_names[] = {"F1 part [0]", "F1 part [1]"};
  SeriesGF sum1(order);
  for (int k = 0; k < 2; ++k) {
    const SeriesGF p = series_expand(first_parts[k], order);
    sum1 += p;
    bad = first_mismatch(p, [&](long l) { return direct_first_part(k, l); });
    rep.add(std::string(first_names[k]) + " equals its sum", bad < 0, range_detail("L", l_max, bad));
  }
  rep.add("F1 parts add up to F1", sum1 == f1);

  const SeriesExpr parts[] = {SeriesExpr::part_0_0, SeriesExpr::part_0_1, SeriesExpr::part_1_m1, SeriesExpr::part_1_1};
  const char* names[] = {"F2 part [0,0]", "F2 part [0,1]", "F2 part [1,-1]", "F2 part [1,1]"};
  SeriesGF sum2(order);
  for (int k = 0; k < 4; ++k) {
    const SeriesGF p = series_expand(parts[k], order);
    sum2 += p;
    bad = first_mismatch(p, [&](long l) { return direct_part(k, l); });
    rep.add(std::string(names[k]) + " equals its sum", bad < 0, range_detail("L", l_max, bad));
  }
  rep.add("F2 parts add up to F2", sum2 == f2);
  return rep;
}

CheckReport binomial_identity_check(long l_max) {
  CheckReport rep;
  rep.suite = "series";
  Rat partial = 0;
  long bad = -1;
  for (long l = 1; l <= l_max && bad < 0; ++l) {
    partial += central_ratio(l - 1);
    if (partial != Rat(2 * l) * central_ratio(l)) bad = l;
  }
  rep.add("central binomial partial sums", bad < 0, bad < 0 ? "L = 1.." + std::to_string(l_max) : range_detail("L", l_max, bad));
  return rep;
}

CheckReport coefficient_extraction_check(unsigned k_max, long l_max, std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "series";
  const auto order = static_cast<std::size_t>(l_max);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-9, 9);

  // Returns the fitted degree, or -1 if no polynomial of degree <= k matches.
  auto check_one = [&](const std::vector<long>& h, unsigned k, bool half) -> long {
    SeriesGF hs(order);
    std::vector<Rat> hc;
    for (long c : h) hc.emplace_back(c);
    hs = SeriesGF(order, hc);
    const Rat expo = half ? Rat(-static_cast<long>(2 * k + 1), 2) : Rat(-static_cast<long>(k + 1));
    const SeriesGF s = hs * SeriesGF::power_one_minus_y(order, expo);
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (long l = 0; l <= l_max; ++l) {
      xs.push_back(l);
      ys.push_back(half ? s[static_cast<std::size_t>(l)] / central_ratio(l) : s[static_cast<std::size_t>(l)]);
    }
    const RatPoly p = fit_poly(xs, ys, k);
    for (long l = 0; l <= l_max; ++l)
      if (p.eval(Rat(l)) != ys[static_cast<std::size_t>(l)]) return -1;
    return p.degree();
  };

  auto describe = [](const std::vector<long>& h) {
    std::ostringstream os;
    os << "H = [";
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << h[i];
    os << "]";
    return os.str();
  };

  // fixed cases with known answers
  rep.add("[y^L] 1/(1-y) is constant", check_one({1}, 0, false) == 0);
  rep.add("[y^L] y/(1-y)^2 has degree 1", check_one({0, 1}, 1, false) == 1);
  rep.add("[y^L] 1/(1-y)^(3/2) is B times degree 1", check_one({1}, 1, true) == 1);

  for (unsigned k = 0; k <= k_max; ++k) {
    std::vector<long> h(k + 1);
    do {
      for (auto& c : h) c = coeff(rng);
      if (h[k] == 0) h[k] = 1;
    } while ([&] {
      long s = 0;
      for (long c : h) s += c;
      return s == 0;
    }());
    for (bool half : {false, true}) {
      const long deg = check_one(h, k, half);
      const std::string name = std::string(half ? "half-integer" : "integer") + " exponent, k = " + std::to_string(k);
      rep.add(name, deg >= 0 && deg <= static_cast<long>(k),
              describe(h) + (deg < 0 ? ", no polynomial fit" : ", degree " + std::to_string(deg)));
    }
  }
  return rep;
}

PartialFraction partial_fraction_fit(unsigned r, long l_max) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const auto order = static_cast<std::size_t>(l_max);
  const unsigned dp = (r + 1) / 2;
  const unsigned dq = r / 2;
  const std::size_t unknowns = dp + dq + 2;
  if (static_cast<std::size_t>(l_max) + 1 <= unknowns + 1) throw std::invalid_argument("l_max too small for a validated fit");

  // basis: y^j (1-y)^-(1+r/2) for j <= dp, y^j (1-y)^-((1+r)/2) for j <= dq
  const SeriesGF big = SeriesGF::power_one_minus_y(order, Rat(-static_cast<long>(r + 2), 2));
  const SeriesGF small = SeriesGF::power_one_minus_y(order, Rat(-static_cast<long>(r + 1), 2));
  std::vector<SeriesGF> basis;
  for (unsigned j = 0; j <= dp; ++j) basis.push_back(big.shift(j));
  for (unsigned j = 0; j <= dq; ++j) basis.push_back(small.shift(j));

  std::vector<Rat> target;
  for (long l = 0; l <= l_max; ++l) target.push_back(nested_block_sum(2 * l, r));

  std::vector<std::vector<Rat>> a(unknowns, std::vector<Rat>(unknowns));
  std::vector<Rat> b(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) a[i][j] = basis[j][i];
    b[i] = target[i];
  }
  auto sol = solve_exact(a, b);
  if (!sol) throw FitError("singular partial-fraction system for r = " + std::to_string(r));
  for (long l = 0; l <= l_max; ++l) {
    Rat v = 0;
    for (std::size_t j = 0; j < unknowns; ++j) v += (*sol)[j] * basis[j][static_cast<std::size_t>(l)];
    if (v != target[static_cast<std::size_t>(l)])
      throw FitError("partial-fraction form for r = " + std::to_string(r) + " fails at L = " + std::to_string(l));
  }
  return {RatPoly(std::vector<Rat>(sol->begin(), sol->begin() + dp + 1)),
          RatPoly(std::vector<Rat>(sol->begin() + dp + 1, sol->end()))};
}

CheckReport partial_fraction_check(unsigned r_max, long l_max) {
  CheckReport rep;
  rep.suite = "series";
  for (unsigned r = 1; r <= r_max; ++r) {
    const std::string name = "partial-fraction form, r = " + std::to_string(r);
    try {
      const auto pf = partial_fraction_fit(r, l_max);
      bool ok = pf.p.degree() <= static_cast<long>((r + 1) / 2) && pf.q.degree() <= static_cast<long>(r / 2);
      if (r == 1) ok = ok && pf.p == RatPoly({Rat(1, 2), Rat(1, 2)}) && pf.q == RatPoly({Rat(-1, 2)});
      if (r == 2) ok = ok && pf.p == RatPoly({Rat(3, 2), Rat(-1, 2)}) && pf.q == RatPoly({Rat(-3, 2)});
      rep.add(name, ok, "P(y) = " + pf.p.to_string('y') + ", Q(y) = " + pf.q.to_string('y'));
    } catch (const FitError& e) {
      rep.add(name, false, e.what());
    }
  }
  return rep;
}

}  // namespace riffle
