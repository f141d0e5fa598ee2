#pragma once

// Limb-sliced big-integer polynomial storage and the SIMD addition kernels
// behind the half-deck recurrences.
//
// A polynomial block holds `width` coefficients, each an unsigned integer
// split into `limbs` 31-bit limbs. Storage is limb-major: limb j of
// coefficient i lives at data[j * stride + i]. Adding two blocks is then
// data-parallel across coefficients; carries only travel from limb j to j+1
// within one lane, so each SIMD lane runs an independent ripple-carry adder.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "riffle/core.hpp"

namespace riffle::kernels {

inline constexpr unsigned kLimbBits = 31;
inline constexpr std::uint32_t kLimbMask = (std::uint32_t{1} << kLimbBits) - 1;

/// Limbs needed to hold any value < 2^(bits+1), i.e. any value <= 2^bits.
constexpr std::size_t limbs_for_bits(std::size_t bits) { return bits / kLimbBits + 1; }

enum class SimdLevel { scalar, avx2, avx512 };

/// dst[j*stride + i] += src[j*stride + i] for i < width, j < limbs, carrying
/// per lane from limb j into limb j+1. Limbs of dst and src must already be
/// reduced (< 2^31). Returns the OR of the carries out of the top limb; a
/// nonzero return means the sum did not fit.
using LimbAddFn = std::uint32_t (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                                    std::size_t limbs, std::size_t stride);

std::uint32_t limb_add_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                              std::size_t limbs, std::size_t stride);
#if defined(RIFFLE_BUILD_AVX2) || defined(RIFFLE_KERNEL_DECLS_ALL)
std::uint32_t limb_add_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                            std::size_t limbs, std::size_t stride);
#endif
#if defined(RIFFLE_BUILD_AVX512) || defined(RIFFLE_KERNEL_DECLS_ALL)
std::uint32_t limb_add_avx512(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                              std::size_t limbs, std::size_t stride);
#endif

/// Compiled in and supported by the running CPU.
bool available(SimdLevel level);
SimdLevel best_available();
/// Levels usable on this machine, scalar first.
std::vector<SimdLevel> available_levels();
LimbAddFn limb_add_for(SimdLevel level);
std::string_view name(SimdLevel level);
/// Parses "scalar", "avx2", "avx512"; throws std::invalid_argument otherwise.
SimdLevel parse_level(std::string_view text);

/// Level used by the recurrences. Defaults to best_available(), or to the
/// RIFFLE_SIMD environment variable when set to an available level.
SimdLevel active_level();
/// Overrides the active level for the process; throws if unavailable.
void set_active_level(SimdLevel level);

/// Owning limb-sliced block: `count` polynomials of `width` coefficients and
/// `limbs` limbs each, laid out one after another.
class LimbBlock {
 public:
  LimbBlock() = default;
  LimbBlock(std::size_t count, std::size_t limbs, std::size_t width);

  std::size_t count() const { return count_; }
  std::size_t limbs() const { return limbs_; }
  std::size_t width() const { return width_; }
  std::size_t poly_size() const { return limbs_ * width_; }

  std::uint32_t* poly(std::size_t idx) { return data_.data() + idx * poly_size(); }
  const std::uint32_t* poly(std::size_t idx) const { return data_.data() + idx * poly_size(); }

  /// Converts polynomial idx to big-integer form.
  GFPoly to_gfpoly(std::size_t idx) const;

 private:
  std::size_t count_ = 0;
  std::size_t limbs_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Packs a nonnegative big integer into `limbs` 31-bit limbs at p[j*stride].
/// Throws if it does not fit.
void store_limbs(const BigInt& v, std::uint32_t* p, std::size_t limbs, std::size_t stride);
BigInt load_limbs(const std::uint32_t* p, std::size_t limbs, std::size_t stride);

}  // namespace riffle::kernels
