#include <arm_neon.h>

#include "kskit/simd/bitset_kernels.hpp"

namespace kskit::simd {
namespace {

inline std::size_t popcount128(uint64x2_t v) {
  return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(&dst[i], vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  // vbicq_u64(x, y) = x & ~y
  for (; i + 2 <= n; i += 2) vst1q_u64(&dst[i], vbicq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcount128(vld1q_u64(&a[i]));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcount128(vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])))) != 0) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool any(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(&a[i]))) != 0) return true;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

}  // namespace

const BitsetKernels& neon_kernels_impl() noexcept {
  static const BitsetKernels k{Isa::neon, and_into, andnot_into, popcount, and_popcount, intersects, any};
  return k;
}

}  // namespace kskit::simd
