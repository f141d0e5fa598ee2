#include "riffle/kernels.hpp"

namespace riffle::kernels {

std::uint32_t limb_add_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t width,
                              std::size_t limbs, std::size_t stride) {
  std::uint32_t overflow = 0;
  for (std::size_t i = 0; i < width; ++i) {
    std::uint32_t carry = 0;
    for (std::size_t j = 0; j < limbs; ++j) {
      const std::size_t at = j * stride + i;
      const std::uint32_t s = dst[at] + src[at] + carry;
      dst[at] = s & kLimbMask;
      carry = s >> kLimbBits;
    }
    overflow |= carry;
  }
  return overflow;
}

}  // namespace riffle::kernels
