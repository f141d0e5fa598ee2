#include "riffle/gf_fast.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

#include "riffle/kernels.hpp"

namespace riffle {

namespace {

using kernels::LimbBlock;

// Coefficient slots per polynomial on diagonal d. First-sequence hits number
// at most floor(d/2) + 1 and second-sequence hits at most 2, so the degree
// stays below d/2 + 4; one spare slot keeps shifted reads in range.
std::size_t width_for(long d) { return static_cast<std::size_t>(d / 2 + 5); }

// Fills the recurrence table diagonal by diagonal (a1 + a2 = d) and returns
// the polynomials of the last diagonal, index a = a1.
LimbBlock sweep(long d_max, std::optional<long> s) {
  if (d_max < 0) throw std::invalid_argument("half-deck length must be nonnegative");
  const std::size_t limbs = kernels::limbs_for_bits(static_cast<std::size_t>(d_max));
  const std::size_t width = width_for(d_max);
  const auto states = static_cast<std::size_t>(d_max) + 1;
  LimbBlock prev(states, limbs, width);
  LimbBlock cur(states, limbs, width);
  prev.poly(0)[0] = 1;  // G(0, 0) = 1

  const auto add = kernels::limb_add_for(kernels::active_level());
  for (long d = 1; d <= d_max; ++d) {
    const std::size_t ld = kernels::limbs_for_bits(static_cast<std::size_t>(d));
    const std::size_t wd = std::min(width, width_for(d));
    const long guess = d / 2 + 1;
    std::uint32_t overflow = 0;
    for (long a1 = 0; a1 <= d; ++a1) {
      const long a2 = d - a1;
      std::uint32_t* dst = cur.poly(static_cast<std::size_t>(a1));
      for (std::size_t j = 0; j < ld; ++j) std::memset(dst + j * width, 0, wd * sizeof(std::uint32_t));
      if (a1 >= 1) {
        // last card is a1 from the first sequence
        const std::size_t shift = (guess == a1) ? 1 : 0;
        overflow |= add(dst + shift, prev.poly(static_cast<std::size_t>(a1 - 1)), wd - shift, ld, width);
      }
      if (a2 >= 1) {
        // last card is s + a2 - 1 from the second sequence
        const std::size_t shift = (s && guess == *s + a2 - 1) ? 1 : 0;
        overflow |= add(dst + shift, prev.poly(static_cast<std::size_t>(a1)), wd - shift, ld, width);
      }
    }
    if (overflow != 0) throw std::logic_error("limb overflow in half-deck recurrence");
    std::swap(prev, cur);
  }
  return prev;
}

GFPoly sum_diagonal(long d) {
  LimbBlock diag = sweep(d, std::nullopt);
  LimbBlock acc(1, diag.limbs(), diag.width());
  const auto add = kernels::limb_add_for(kernels::active_level());
  std::uint32_t overflow = 0;
  for (std::size_t a = 0; a < diag.count(); ++a)
    overflow |= add(acc.poly(0), diag.poly(a), diag.width(), diag.limbs(), diag.width());
  if (overflow != 0) throw std::logic_error("limb overflow summing half-deck diagonal");
  return acc.to_gfpoly(0);
}

}  // namespace

std::vector<GFPoly> g_half_diagonal(long d, std::optional<long> s) {
  LimbBlock diag = sweep(d, s);
  std::vector<GFPoly> out;
  out.reserve(diag.count());
  for (std::size_t a = 0; a < diag.count(); ++a) out.push_back(diag.to_gfpoly(a));
  return out;
}

GFPoly g_half(long a1, long a2, long s) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("g_half: negative sequence length");
  return sweep(a1 + a2, s).to_gfpoly(static_cast<std::size_t>(a1));
}

GFPoly g_half_ns(long a1, long a2) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("g_half_ns: negative sequence length");
  return sweep(a1 + a2, std::nullopt).to_gfpoly(static_cast<std::size_t>(a1));
}

GFPoly f_full_fast(long n) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  const long h = (n + 1) / 2;
  const long m = n - h;

  // top[s][a] = G(a, h - a, s); bottom[s][b] = G(b, m - b, s), s in 1..n+1.
  std::vector<std::vector<GFPoly>> top(static_cast<std::size_t>(n) + 2);
  std::vector<std::vector<GFPoly>> bottom(static_cast<std::size_t>(n) + 2);
  for (long s = 1; s <= n + 1; ++s) {
    top[static_cast<std::size_t>(s)] = g_half_diagonal(h, s);
    bottom[static_cast<std::size_t>(s)] = g_half_diagonal(m, s);
  }

  std::vector<BigInt> acc(width_for(h) + width_for(m));
  for (long a = 0; a <= h; ++a) {
    for (long b = 0; b <= m; ++b) {
      const long s_top = a + (m - b) + 1;
      const long s_bottom = b + (h - a) + 1;
      const auto& x = top[static_cast<std::size_t>(s_top)][static_cast<std::size_t>(a)].coeffs();
      const auto& y = bottom[static_cast<std::size_t>(s_bottom)][static_cast<std::size_t>(b)].coeffs();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
          mpz_addmul(acc[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
    }
  }
  return GFPoly(std::move(acc));
}

GFPoly f_a(long h) { return sum_diagonal(h); }

GFPoly f_b(long n, long h) {
  if (h < 0 || h > n) throw std::invalid_argument("f_b: half length outside 0..n");
  return sum_diagonal(n - h);
}

GFPoly excess_poly() { return GFPoly{0, 0, -2, -2, 4}; }

FastestResult f_full_fastest_routed(long n) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  if (n < kFastestMinN) return {f_full_fast(n), true};
  const long h = (n + 1) / 2;
  GFPoly fa = f_a(h);
  GFPoly fb = (n % 2 == 0) ? fa : f_b(n, h);
  return {excess_poly() + fa * fb, false};
}

GFPoly f_full_fastest(long n) { return f_full_fastest_routed(n).poly; }

}  // namespace riffle
