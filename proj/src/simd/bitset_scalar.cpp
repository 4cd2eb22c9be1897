#include <bit>

#include "kskit/simd/bitset_kernels.hpp"

namespace kskit::simd {
namespace {

void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return n;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool any(std::span<const Word> a) {
  for (Word w : a) {
    if (w != 0) return true;
  }
  return false;
}

}  // namespace

const BitsetKernels& scalar_kernels() noexcept {
  static const BitsetKernels k{Isa::scalar, and_into, andnot_into, popcount, and_popcount, intersects, any};
  return k;
}

}  // namespace kskit::simd
