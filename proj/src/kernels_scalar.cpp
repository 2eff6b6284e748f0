#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "whm/kernels.hpp"

namespace whm::kernels {

namespace detail {
const KernelSet* avx2_kernels() noexcept;  // kernels_avx2.cpp
}

namespace {

void add_mod_scalar(Elem* acc, const Elem* row, std::size_t n, Elem q) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = std::uint32_t{acc[i]} + row[i];
    acc[i] = static_cast<Elem>(s >= q ? s - q : s);
  }
}

void sub_mod_scalar(Elem* out, const Elem* a, const Elem* b, std::size_t n, Elem q) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Elem>(a[i] >= b[i] ? a[i] - b[i] : a[i] + q - b[i]);
  }
}

void mismatch_mask_scalar(const Elem* a, const Elem* b, std::size_t n, std::uint64_t* words) {
  std::fill_n(words, mask_words(n), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

void nonzero_mask_scalar(const Elem* v, std::size_t n, std::uint64_t* words) {
  std::fill_n(words, mask_words(n), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

constexpr KernelSet kScalar{"scalar", add_mod_scalar, sub_mod_scalar, mismatch_mask_scalar,
                            nonzero_mask_scalar};

const KernelSet& select() noexcept {
  const char* env = std::getenv("WHM_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return kScalar;
  if (const KernelSet* k = avx2()) return *k;
  return kScalar;
}

}  // namespace

const KernelSet& scalar() noexcept { return kScalar; }

const KernelSet* avx2() noexcept { return detail::avx2_kernels(); }

const KernelSet& active() noexcept {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace whm::kernels
