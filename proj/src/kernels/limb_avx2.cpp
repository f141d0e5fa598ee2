// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "riffle/kernels.hpp"

namespace riffle::kernels {

std::uint32_t limb_add_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                            std::size_t limbs, std::size_t stride) {
  const __m256i mask = _mm256_set1_epi32(static_cast<int>(kLimbMask));
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= width; i += 8) {
    __m256i carry = _mm256_setzero_si256();
    for (std::size_t j = 0; j < limbs; ++j) {
      const std::size_t at = j * stride + i;
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + at));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + at));
      __m256i s = _mm256_add_epi32(_mm256_add_epi32(a, b), carry);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + at), _mm256_and_si256(s, mask));
      carry = _mm256_srli_epi32(s, kLimbBits);
    }
    overflow = _mm256_or_si256(overflow, carry);
  }
  std::uint32_t result = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi32(overflow, _mm256_setzero_si256())) != -1);
  if (i < width) result |= limb_add_scalar(dst + i, src + i, width - i, limbs, stride);
  return result;
}

}  // namespace riffle::kernels
