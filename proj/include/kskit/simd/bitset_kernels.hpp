// Word-parallel kernels over packed bitsets (64 vertices per word).
//
// The graph searches spend nearly all of their time in these loops. A
// scalar reference implementation is always built; AVX2 (x86-64) and NEON
// (AArch64) variants are compiled when the toolchain supports them and
// picked at runtime. Every variant must agree bit-for-bit with the scalar
// one; tests/test_bitset_kernels.cpp checks that on random inputs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace kskit::simd {

using Word = std::uint64_t;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct BitsetKernels {
  Isa isa;
  /// dst = a & b
  void (*and_into)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  /// dst = a & ~b
  void (*andnot_into)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
  /// popcount(a & b)
  std::size_t (*and_popcount)(std::span<const Word> a, std::span<const Word> b);
  /// (a & b) != 0
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  bool (*any)(std::span<const Word> a);
};

const BitsetKernels& scalar_kernels() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks the feature.
const BitsetKernels* avx2_kernels() noexcept;
const BitsetKernels* neon_kernels() noexcept;

/// Best available variant. Setting KSKIT_SIMD=scalar in the environment
/// forces the reference kernels.
const BitsetKernels& active_kernels() noexcept;

}  // namespace kskit::simd
