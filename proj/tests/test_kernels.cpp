#include <cstdlib>

#include "doctest.h"
#include "whm/kernels.hpp"
#include "whm/rng.hpp"

using namespace whm;

namespace {

Vector random_vec(Rng& rng, std::size_t n, std::uint32_t q) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Elem>(rng.uniform_below(q));
  return v;
}

// Sparse on purpose so the masks see both values.
Vector sparse_vec(Rng& rng, std::size_t n, std::uint32_t q) {
  Vector v(n, 0);
  for (auto& x : v)
    if (rng.uniform_below(3) == 0) x = static_cast<Elem>(rng.uniform_below(q));
  return v;
}

void check_equivalent(const kernels::KernelSet& a, const kernels::KernelSet& b) {
  Rng rng(2024);
  for (std::uint32_t q : {2u, 3u, 7u, 251u, 32749u, 65521u}) {
    for (std::size_t n : {0, 1, 7, 15, 16, 17, 31, 32, 33, 63, 64, 65, 100, 255, 1000}) {
      const Vector x = random_vec(rng, n, q), y = random_vec(rng, n, q);
      Vector s1 = x, s2 = x;
      a.add_mod(s1.data(), y.data(), n, static_cast<Elem>(q));
      b.add_mod(s2.data(), y.data(), n, static_cast<Elem>(q));
      CHECK(s1 == s2);
      for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == (x[i] + y[i]) % q);

      Vector d1(n), d2(n);
      a.sub_mod(d1.data(), x.data(), y.data(), n, static_cast<Elem>(q));
      b.sub_mod(d2.data(), x.data(), y.data(), n, static_cast<Elem>(q));
      CHECK(d1 == d2);

      const Vector u = sparse_vec(rng, n, q), w = sparse_vec(rng, n, q);
      std::vector<std::uint64_t> m1(kernels::mask_words(n), ~0ull), m2(kernels::mask_words(n), ~0ull);
      a.mismatch_mask(u.data(), w.data(), n, m1.data());
      b.mismatch_mask(u.data(), w.data(), n, m2.data());
      CHECK(m1 == m2);
      for (std::size_t i = 0; i < n; ++i) CHECK(((m1[i / 64] >> (i % 64)) & 1) == (u[i] != w[i]));

      a.nonzero_mask(u.data(), n, m1.data());
      b.nonzero_mask(u.data(), n, m2.data());
      CHECK(m1 == m2);
      for (std::size_t i = 0; i < n; ++i) CHECK(((m1[i / 64] >> (i % 64)) & 1) == (u[i] != 0));
      // bits past n stay clear
      if (n % 64) CHECK((m1.back() >> (n % 64)) == 0);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match plain arithmetic") { check_equivalent(kernels::scalar(), kernels::scalar()); }

TEST_CASE("avx2 kernels match scalar") {
  const kernels::KernelSet* v = kernels::avx2();
  if (!v) {
    MESSAGE("AVX2 unavailable; skipped");
    return;
  }
  check_equivalent(kernels::scalar(), *v);
}

TEST_CASE("active kernel set") {
  const char* forced = std::getenv("WHM_KERNELS");
  const auto& k = kernels::active();
  if (forced && std::string(forced) == "scalar") CHECK(&k == &kernels::scalar());
  else if (kernels::avx2()) CHECK(&k == kernels::avx2());
}
