// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kskit/simd/bitset_kernels.hpp"

namespace kskit::simd {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

inline std::size_t popcount256(__m256i v) {
  return static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 0))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 1))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 2))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 3))));
}

void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(&dst[i], _mm256_and_si256(load(&a[i]), load(&b[i])));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) = ~x & y
  for (; i + 4 <= n; i += 4) store(&dst[i], _mm256_andnot_si256(load(&b[i]), load(&a[i])));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += popcount256(load(&a[i]));
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += popcount256(_mm256_and_si256(load(&a[i]), load(&b[i])));
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = load(&a[i]);
    if (!_mm256_testz_si256(va, load(&b[i]))) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool any(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = load(&a[i]);
    if (!_mm256_testz_si256(va, va)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

}  // namespace

const BitsetKernels& avx2_kernels_impl() noexcept {
  static const BitsetKernels k{Isa::avx2, and_into, andnot_into, popcount, and_popcount, intersects, any};
  return k;
}

}  // namespace kskit::simd
