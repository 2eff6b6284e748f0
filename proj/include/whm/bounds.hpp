#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "whm/bigint.hpp"
#include "whm/block_metric.hpp"
#include "whm/linear_code.hpp"

namespace whm {

// Bounds on the dimension log_q |C| of a code with minimum weighted-Hamming
// distance d. All arithmetic is exact; floor(log_q x) means the largest k with
// q^k <= x.

/// Singleton-like upper bound. Blocks are sorted by scaling internally.
/// Throws InvalidDistance unless 1 <= d <= M.
std::uint64_t singleton_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d);

/// Weighted distance of any MDS code of dimension k: its lightest codeword
/// fills the n - k + 1 cheapest positions. Throws InvalidDimension unless
/// 1 <= k <= n.
std::uint64_t mds_wh_distance(std::uint32_t q, const BlockStructure& bs, std::uint64_t k);

/// Sphere-packing: largest k with q^k |B(floor((d-1)/2))| <= q^n. 1 <= d <= M + 1.
std::uint64_t hamming_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d);

/// Sphere-covering: smallest k with q^k |B(d-1)| >= q^n. 1 <= d <= M.
std::uint64_t gv_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d);

/// Plotkin-like bound floor(log_q(d / (d - (q-1)M/q))) for linear codes; nullopt
/// unless d > (q-1)M/q.
std::optional<std::uint64_t> plotkin_bound(std::uint32_t q, const BlockStructure& bs,
                                           std::uint64_t d);

/// Hamming-metric Krawtchouk coefficient K_j(i) for length n over F_q.
BigInt krawtchouk(std::uint32_t q, std::uint32_t n, std::uint32_t j, std::uint32_t i);

/// T-weight MacWilliams transform: the enumerator of the dual of a code with
/// enumerator `a` and |C| = code_size. Throws NonIntegralTransform if some
/// result is negative or not an integer.
TWeightEnumerator macwilliams_transform(const TWeightEnumerator& a, std::uint32_t q,
                                        const BlockStructure& bs, const BigInt& code_size);

struct LpBound {
  /// Optimum of sum_i A_i (A_0 = 1 included): an upper bound on |C|.
  Rational value;
  /// floor(log_q value).
  std::uint64_t k = 0;
  std::size_t pivots = 0;
};

/// Delsarte-style LP bound over T-weight distributions: maximize sum A_i with
/// A_0 = 1, A_i >= 0, A_i = 0 for 1 <= wt(i) < d and nonnegative
/// MacWilliams-transformed entries. Throws InvalidDistance unless 1 <= d <= M.
LpBound lp_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d);

struct BoundReport {
  std::uint32_t q = 0;
  BlockStructure bs;
  std::uint64_t d = 0;
  std::uint64_t singleton_k = 0;
  std::uint64_t hamming_k = 0;
  std::uint64_t gv_k = 0;
  std::optional<std::uint64_t> plotkin_k;
  std::uint64_t lp_k = 0;
  Rational lp_value;
};

BoundReport bound_report(std::uint32_t q, const BlockStructure& bs, std::uint64_t d);

/// One report per d in [d_first, d_last].
std::vector<BoundReport> bounds_table(std::uint32_t q, const BlockStructure& bs,
                                      std::uint64_t d_first, std::uint64_t d_last);

}  // namespace whm
