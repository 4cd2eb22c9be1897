#include <cstdlib>
#include <string_view>

#include "kskit/simd/bitset_kernels.hpp"

namespace kskit::simd {

#if defined(KSKIT_HAVE_AVX2)
const BitsetKernels& avx2_kernels_impl() noexcept;
#endif
#if defined(KSKIT_HAVE_NEON)
const BitsetKernels& neon_kernels_impl() noexcept;
#endif

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const BitsetKernels* avx2_kernels() noexcept {
#if defined(KSKIT_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) return &avx2_kernels_impl();
#endif
  return nullptr;
}

const BitsetKernels* neon_kernels() noexcept {
#if defined(KSKIT_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  return &neon_kernels_impl();
#else
  return nullptr;
#endif
}

const BitsetKernels& active_kernels() noexcept {
  static const BitsetKernels* chosen = [] {
    if (const char* env = std::getenv("KSKIT_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
      return &scalar_kernels();
    }
    if (const auto* k = avx2_kernels()) return k;
    if (const auto* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace kskit::simd
