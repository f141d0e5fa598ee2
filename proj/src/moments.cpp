#include "riffle/moments.hpp"

#include <algorithm>
#include <stdexcept>

#include "riffle/closedform.hpp"
#include "riffle/gf_fast.hpp"
#include "riffle/shuffle.hpp"

namespace riffle {

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::slow: return "slow";
    case Tier::fast: return "fast";
    case Tier::fastest: return "fastest";
  }
  return "?";
}

Tier parse_tier(std::string_view s) {
  if (s == "slow") return Tier::slow;
  if (s == "fast") return Tier::fast;
  if (s == "fastest") return Tier::fastest;
  throw std::invalid_argument("unknown tier '" + std::string(s) + "' (slow, fast, fastest)");
}

Generated generate(long n, Tier tier) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  switch (tier) {
    case Tier::slow: return {gen_slow(ShuffleSpec::from_shuffles(n, 1)), tier, tier};
    case Tier::fast: return {f_full_fast(n), tier, tier};
    case Tier::fastest: {
      auto r = f_full_fastest_routed(n);
      return {std::move(r.poly), tier, r.routed_to_fast ? Tier::fast : Tier::fastest};
    }
  }
  throw std::invalid_argument("unknown tier");
}

Rat normalized_moment(const GFPoly& p, unsigned r) { return make_rat(d_eval_at_one(p, r), eval_at_one(p)); }

Rat raw_moment(long n, unsigned r, Tier tier) { return normalized_moment(generate(n, tier).poly, r); }

std::vector<Rat> raw_moments(long n, unsigned max_r, Tier tier) {
  const GFPoly p = generate(n, tier).poly;
  std::vector<Rat> out;
  for (unsigned r = 0; r <= max_r; ++r) out.push_back(normalized_moment(p, r));
  return out;
}

BigInt excess_e(unsigned r) { return d_eval_at_one(excess_poly(), r); }

HalfMomentCounts half_moment_numeric(long n, unsigned r) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  const long h = (n + 1) / 2;
  const BigInt top = d_eval_at_one(f_a(h), r) * pow2(static_cast<unsigned long>(n - h));
  const BigInt bottom = d_eval_at_one(f_b(n, h), r) * pow2(static_cast<unsigned long>(h));
  return {top, bottom};
}

Rat assemble_raw_from_halves(long n, unsigned r) {
  if (n < kFastestMinN)
    throw std::invalid_argument("half-deck assembly needs n >= " + std::to_string(kFastestMinN));
  const long h = (n + 1) / 2;
  const GFPoly fa = f_a(h);
  const GFPoly fb = f_b(n, h);
  BigInt total = excess_e(r);
  for (unsigned i = 0; i <= r; ++i) total += binom(r, i) * d_eval_at_one(fa, i) * d_eval_at_one(fb, r - i);
  return make_rat(total, pow2(static_cast<unsigned long>(n)));
}

std::vector<Rat> central_from_raw(const std::vector<Rat>& raw) {
  if (raw.empty()) return {};
  const Rat mu = raw.size() > 1 ? raw[1] : Rat(0);
  std::vector<Rat> out;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    Rat acc = 0;
    Rat neg_mu_pow = 1;  // (-mu)^(r-k), built from k = r downwards
    for (std::size_t k = r + 1; k-- > 0;) {
      acc += Rat(binom(static_cast<long>(r), static_cast<long>(k))) * raw[k] * neg_mu_pow;
      neg_mu_pow *= -mu;
    }
    acc.canonicalize();
    out.push_back(acc);
  }
  return out;
}

std::string source_name(MomentSource s) {
  switch (s) {
    case MomentSource::automatic: return "automatic";
    case MomentSource::numeric: return "numeric";
    case MomentSource::closed_form: return "closed_form";
  }
  return "?";
}

MomentReport central_and_standardized(long n, unsigned max_r, unsigned precision, MomentSource source) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  if (max_r < 1) throw std::invalid_argument("moment order must be at least 1");
  if (precision < 1) throw std::invalid_argument("precision must be at least 1 digit");
  if (source == MomentSource::automatic)
    source = n <= kNumericMomentMaxN ? MomentSource::numeric : MomentSource::closed_form;

  MomentReport rep;
  rep.n = n;
  rep.max_r = max_r;
  rep.precision = precision;
  rep.source = source;
  // the variance is needed even when only the mean is requested
  const unsigned order = std::max(max_r, 2u);
  if (source == MomentSource::numeric) {
    rep.raw = raw_moments(n, order, Tier::fastest);
  } else {
    if (order > kMaxExpressionOrder)
      throw GuardError("closed-form moments cover r <= " + std::to_string(kMaxExpressionOrder));
    if (n < kFastestMinN) throw GuardError("closed-form moments need n >= " + std::to_string(kFastestMinN));
    const long alpha = n - 4 * ((n + 1) / 4);
    rep.raw.push_back(Rat(1));
    for (unsigned r = 1; r <= order; ++r) rep.raw.push_back(moment_expression(r, alpha).evaluate(n));
  }
  rep.central = central_from_raw(rep.raw);
  const Rat var = rep.central[2];
  rep.raw.resize(max_r + 1);
  rep.central.resize(max_r + 1);
  if (var != 0) {
    const Decimal v(var, precision);
    for (unsigned r = 0; r <= max_r; ++r) rep.standardized.push_back(Decimal(rep.central[r], precision) / v.pow_half(r));
  }
  return rep;
}

DistributionTable distribution_table(long n, Tier tier) {
  Generated g = generate(n, tier);
  DistributionTable t;
  t.n = n;
  t.requested = g.requested;
  t.used = g.used;
  t.outcomes = eval_at_one(g.poly);
  for (long i = 0; i <= g.poly.degree(); ++i) {
    const BigInt c = g.poly.coeff(static_cast<std::size_t>(i));
    t.rows.push_back({i, c, make_rat(c, t.outcomes)});
  }
  t.mean = normalized_moment(g.poly, 1);
  return t;
}

}  // namespace riffle
