#pragma once

// Inner-loop kernels over vectors of field elements. Every kernel has a
// portable scalar reference; an AVX2 variant is picked at runtime when the CPU
// supports it. Set WHM_KERNELS=scalar in the environment to force the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>

#include "whm/field.hpp"

namespace whm::kernels {

struct KernelSet {
  const char* name;
  /// acc[i] = (acc[i] + row[i]) mod q, operands in [0, q).
  void (*add_mod)(Elem* acc, const Elem* row, std::size_t n, Elem q);
  /// out[i] = (a[i] - b[i]) mod q.
  void (*sub_mod)(Elem* out, const Elem* a, const Elem* b, std::size_t n, Elem q);
  /// Bit i of `words` set iff a[i] != b[i]; words must hold mask_words(n) entries.
  void (*mismatch_mask)(const Elem* a, const Elem* b, std::size_t n, std::uint64_t* words);
  /// Bit i of `words` set iff v[i] != 0.
  void (*nonzero_mask)(const Elem* v, std::size_t n, std::uint64_t* words);
};

constexpr std::size_t mask_words(std::size_t n) noexcept { return (n + 63) / 64; }

const KernelSet& scalar() noexcept;
/// nullptr if AVX2 was not compiled in or the running CPU lacks it.
const KernelSet* avx2() noexcept;
/// The kernel set used by the library.
const KernelSet& active() noexcept;

inline void add_mod(std::span<Elem> acc, std::span<const Elem> row, Elem q) noexcept {
  active().add_mod(acc.data(), row.data(), acc.size(), q);
}
inline void sub_mod(std::span<Elem> out, std::span<const Elem> a, std::span<const Elem> b,
                    Elem q) noexcept {
  active().sub_mod(out.data(), a.data(), b.data(), out.size(), q);
}
inline void mismatch_mask(std::span<const Elem> a, std::span<const Elem> b,
                          std::span<std::uint64_t> words) noexcept {
  active().mismatch_mask(a.data(), b.data(), a.size(), words.data());
}
inline void nonzero_mask(std::span<const Elem> v, std::span<std::uint64_t> words) noexcept {
  active().nonzero_mask(v.data(), v.size(), words.data());
}

}  // namespace whm::kernels
