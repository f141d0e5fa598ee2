// Compiled with -mavx512f; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "riffle/kernels.hpp"

namespace riffle::kernels {

std::uint32_t limb_add_avx512(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                              std::size_t limbs, std::size_t stride) {
  const __m512i mask = _mm512_set1_epi32(static_cast<int>(kLimbMask));
  __m512i overflow = _mm512_setzero_si512();
  std::size_t i = 0;
  for (; i + 16 <= width; i += 16) {
    __m512i carry = _mm512_setzero_si512();
    for (std::size_t j = 0; j < limbs; ++j) {
      const std::size_t at = j * stride + i;
      __m512i a = _mm512_loadu_si512(dst + at);
      __m512i b = _mm512_loadu_si512(src + at);
      __m512i s = _mm512_add_epi32(_mm512_add_epi32(a, b), carry);
      _mm512_storeu_si512(dst + at, _mm512_and_si512(s, mask));
      carry = _mm512_srli_epi32(s, kLimbBits);
    }
    overflow = _mm512_or_si512(overflow, carry);
  }
  std::uint32_t result = _mm512_test_epi32_mask(overflow, overflow) != 0 ? 1u : 0u;
  if (i < width) result |= limb_add_scalar(dst + i, src + i, width - i, limbs, stride);
  return result;
}

}  // namespace riffle::kernels
