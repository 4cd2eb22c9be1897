// Fixed-size dynamic bitset backed by the runtime-selected SIMD kernels.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kskit/simd/bitset_kernels.hpp"

namespace kskit {

class Bitset {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= simd::Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(simd::Word{1} << (i & 63)); }
  bool test(std::size_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
  void set_all() {
    for (auto& w : words_) w = ~simd::Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const { return kernels().popcount(words_); }
  bool any() const { return kernels().any(words_); }
  bool none() const { return !any(); }
  bool intersects(const Bitset& o) const { return kernels().intersects(words_, o.words_); }
  std::size_t count_and(const Bitset& o) const { return kernels().and_popcount(words_, o.words_); }

  Bitset& operator&=(const Bitset& o) {
    kernels().and_into(words_, words_, o.words_);
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    kernels().andnot_into(words_, words_, o.words_);
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  std::size_t first() const { return next(0); }
  /// Smallest set index >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= nbits_) return npos;
    std::size_t w = from >> 6;
    simd::Word bits = words_[w] & (~simd::Word{0} << (from & 63));
    while (true) {
      if (bits != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w == words_.size()) return npos;
      bits = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      simd::Word bits = words_[w];
      while (bits != 0) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const simd::Word> words() const noexcept { return words_; }
  std::span<simd::Word> words() noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static const simd::BitsetKernels& kernels() {
    static const simd::BitsetKernels& k = simd::active_kernels();
    return k;
  }
  void trim() {
    if (nbits_ % 64 != 0) words_.back() &= (simd::Word{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<simd::Word> words_;
};

}  // namespace kskit
