#pragma once

#include <cstdint>
#include <vector>

#include "whm/bigint.hpp"
#include "whm/block_metric.hpp"

namespace whm {

/// All T-weights (w_1..w_m), 0 <= w_l <= n_l, with sum_l w_l lambda_l = s,
/// in lexicographic order.
std::vector<TWeight> lambda_set(std::uint64_t s, const BlockStructure& bs);

/// Every T-weight of the block structure, lexicographic.
std::vector<TWeight> all_t_weights(const BlockStructure& bs);

/// Number of vectors in F_q^n of T-weight t: prod_l C(n_l, t_l) (q-1)^{t_l}.
BigInt t_weight_class_size(std::uint32_t q, const BlockStructure& bs, const TWeight& t);

/// Number of vectors of weighted-Hamming weight exactly s, summed over lambda_set(s).
BigInt sphere_size(std::uint32_t q, const BlockStructure& bs, std::uint64_t s);

/// Entry s is the number of vectors of weight exactly s, for s = 0..min(r, M);
/// heavier spheres are empty.
/// Computed by convolving per-block weight polynomials, block index ascending.
std::vector<BigInt> weight_distribution(std::uint32_t q, const BlockStructure& bs,
                                        std::uint64_t r);

/// |B_q(n, r, lambda)|, the number of vectors of weight <= r.
BigInt ball_size(std::uint32_t q, const BlockStructure& bs, std::uint64_t r);

}  // namespace whm
