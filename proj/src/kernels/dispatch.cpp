#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "riffle/kernels.hpp"

namespace riffle::kernels {

namespace {

bool cpu_supports(SimdLevel level) {
#if defined(__x86_64__) || defined(__i386__)
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
      return __builtin_cpu_supports("avx2");
    case SimdLevel::avx512:
      return __builtin_cpu_supports("avx512f");
  }
  return false;
#else
  return level == SimdLevel::scalar;
#endif
}

bool compiled_in(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
#if defined(RIFFLE_BUILD_AVX2)
      return true;
#else
      return false;
#endif
    case SimdLevel::avx512:
#if defined(RIFFLE_BUILD_AVX512)
      return true;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel initial_level() {
  if (const char* env = std::getenv("RIFFLE_SIMD"); env != nullptr && *env != '\0') {
    try {
      SimdLevel wanted = parse_level(env);
      if (available(wanted)) return wanted;
    } catch (const std::invalid_argument&) {
      // unknown value: fall through to auto-detection
    }
  }
  return best_available();
}

std::atomic<SimdLevel>& level_slot() {
  static std::atomic<SimdLevel> slot{initial_level()};
  return slot;
}

}  // namespace

bool available(SimdLevel level) { return compiled_in(level) && cpu_supports(level); }

SimdLevel best_available() {
  if (available(SimdLevel::avx512)) return SimdLevel::avx512;
  if (available(SimdLevel::avx2)) return SimdLevel::avx2;
  return SimdLevel::scalar;
}

std::vector<SimdLevel> available_levels() {
  std::vector<SimdLevel> out;
  for (SimdLevel l : {SimdLevel::scalar, SimdLevel::avx2, SimdLevel::avx512})
    if (available(l)) out.push_back(l);
  return out;
}

LimbAddFn limb_add_for(SimdLevel level) {
  if (!available(level)) throw std::invalid_argument("SIMD level not available: " + std::string(name(level)));
  switch (level) {
    case SimdLevel::scalar:
      return &limb_add_scalar;
#if defined(RIFFLE_BUILD_AVX2)
    case SimdLevel::avx2:
      return &limb_add_avx2;
#endif
#if defined(RIFFLE_BUILD_AVX512)
    case SimdLevel::avx512:
      return &limb_add_avx512;
#endif
    default:
      break;
  }
  return &limb_add_scalar;
}

std::string_view name(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return "scalar";
    case SimdLevel::avx2:
      return "avx2";
    case SimdLevel::avx512:
      return "avx512";
  }
  return "unknown";
}

SimdLevel parse_level(std::string_view text) {
  if (text == "scalar") return SimdLevel::scalar;
  if (text == "avx2") return SimdLevel::avx2;
  if (text == "avx512") return SimdLevel::avx512;
  throw std::invalid_argument("unknown SIMD level: " + std::string(text));
}

SimdLevel active_level() { return level_slot().load(std::memory_order_relaxed); }

void set_active_level(SimdLevel level) {
  if (!available(level)) throw std::invalid_argument("SIMD level not available: " + std::string(name(level)));
  level_slot().store(level, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// LimbBlock and conversions

LimbBlock::LimbBlock(std::size_t count, std::size_t limbs, std::size_t width)
    : count_(count), limbs_(limbs), width_(width), data_(count * limbs * width, 0) {}

GFPoly LimbBlock::to_gfpoly(std::size_t idx) const {
  const std::uint32_t* p = poly(idx);
  std::vector<BigInt> coeffs(width_);
  for (std::size_t i = 0; i < width_; ++i) coeffs[i] = load_limbs(p + i, limbs_, width_);
  return GFPoly(std::move(coeffs));
}

void store_limbs(const BigInt& v, std::uint32_t* p, std::size_t limbs, std::size_t stride) {
  if (v < 0) throw std::invalid_argument("store_limbs: negative value");
  BigInt rest = v;
  for (std::size_t j = 0; j < limbs; ++j) {
    p[j * stride] = static_cast<std::uint32_t>(mpz_fdiv_ui(rest.get_mpz_t(), std::uint64_t{1} << kLimbBits));
    mpz_fdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), kLimbBits);
  }
  if (rest != 0) throw std::overflow_error("store_limbs: value does not fit");
}

BigInt load_limbs(const std::uint32_t* p, std::size_t limbs, std::size_t stride) {
  BigInt v = 0;
  for (std::size_t j = limbs; j-- > 0;) {
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), kLimbBits);
    v += static_cast<unsigned long>(p[j * stride]);
  }
  return v;
}

}  // namespace riffle::kernels
