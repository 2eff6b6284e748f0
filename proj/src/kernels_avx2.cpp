// AVX2 variants of the vector kernels. This translation unit is compiled with
// -mavx2 on x86-64; callers reach it only through the runtime dispatch in
// kernels_scalar.cpp.

#include "whm/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

#include <algorithm>

namespace whm::kernels::detail {

namespace {

// 16 lanes of uint16 per register.
constexpr std::size_t kLanes = 16;

inline __m256i ge_epu16(__m256i a, __m256i b) {
  return _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), a);
}

void add_mod_avx2(Elem* acc, const Elem* row, std::size_t n, Elem q) {
  const __m256i vq = _mm256_set1_epi16(static_cast<short>(q));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    // a + b >= q  <=>  a >= q - b; the 16-bit sum may wrap only in that branch.
    __m256i qb = _mm256_sub_epi16(vq, b);
    __m256i wrap = ge_epu16(a, qb);
    __m256i res = _mm256_blendv_epi8(_mm256_add_epi16(a, b), _mm256_sub_epi16(a, qb), wrap);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), res);
  }
  for (; i < n; ++i) {
    std::uint32_t s = std::uint32_t{acc[i]} + row[i];
    acc[i] = static_cast<Elem>(s >= q ? s - q : s);
  }
}

void sub_mod_avx2(Elem* out, const Elem* a, const Elem* b, std::size_t n, Elem q) {
  const __m256i vq = _mm256_set1_epi16(static_cast<short>(q));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_sub_epi16(va, vb);
    __m256i borrow = _mm256_andnot_si256(ge_epu16(va, vb), vq);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi16(diff, borrow));
  }
  for (; i < n; ++i) out[i] = static_cast<Elem>(a[i] >= b[i] ? a[i] - b[i] : a[i] + q - b[i]);
}

// 32 comparisons -> 32 "equal" bits in element order.
inline std::uint32_t equal_bits32(__m256i eq_lo, __m256i eq_hi) {
  __m256i packed = _mm256_packs_epi16(eq_lo, eq_hi);
  packed = _mm256_permute4x64_epi64(packed, 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

void mismatch_mask_avx2(const Elem* a, const Elem* b, std::size_t n, std::uint64_t* words) {
  std::fill_n(words, mask_words(n), 0);
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + kLanes));
    __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i + kLanes));
    std::uint32_t eq = equal_bits32(_mm256_cmpeq_epi16(a0, b0), _mm256_cmpeq_epi16(a1, b1));
    words[i / 64] |= std::uint64_t{~eq} << (i % 64);
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

void nonzero_mask_avx2(const Elem* v, std::size_t n, std::uint64_t* words) {
  std::fill_n(words, mask_words(n), 0);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i + kLanes));
    std::uint32_t eq = equal_bits32(_mm256_cmpeq_epi16(v0, zero), _mm256_cmpeq_epi16(v1, zero));
    words[i / 64] |= std::uint64_t{~eq} << (i % 64);
  }
  for (; i < n; ++i) {
    if (v[i] != 0) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

constexpr KernelSet kAvx2{"avx2", add_mod_avx2, sub_mod_avx2, mismatch_mask_avx2,
                          nonzero_mask_avx2};

}  // namespace

const KernelSet* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace whm::kernels::detail

#else

namespace whm::kernels::detail {
const KernelSet* avx2_kernels() noexcept { return nullptr; }
}  // namespace whm::kernels::detail

#endif
