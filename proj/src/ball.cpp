#include "whm/ball.hpp"

#include <algorithm>

namespace whm {

namespace {

void collect(const BlockStructure& bs, std::size_t l, std::uint64_t remaining, TWeight& cur,
             std::vector<TWeight>& out) {
  if (l == bs.m()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const Block& b = bs.block(l);
  for (std::uint32_t w = 0; w <= b.length; ++w) {
    const std::uint64_t used = std::uint64_t{w} * b.scaling;
    if (used > remaining) break;
    cur.w[l] = w;
    collect(bs, l + 1, remaining - used, cur, out);
  }
  cur.w[l] = 0;
}

}  // namespace

std::vector<TWeight> lambda_set(std::uint64_t s, const BlockStructure& bs) {
  std::vector<TWeight> out;
  TWeight cur{std::vector<std::uint32_t>(bs.m(), 0)};
  collect(bs, 0, s, cur, out);
  return out;
}

std::vector<TWeight> all_t_weights(const BlockStructure& bs) {
  std::vector<TWeight> out;
  TWeight cur{std::vector<std::uint32_t>(bs.m(), 0)};
  while (true) {
    out.push_back(cur);
    std::size_t l = bs.m();
    while (l > 0) {
      --l;
      if (cur.w[l] < bs.block(l).length) {
        ++cur.w[l];
        break;
      }
      cur.w[l] = 0;
      if (l == 0) return out;
    }
  }
}

BigInt t_weight_class_size(std::uint32_t q, const BlockStructure& bs, const TWeight& t) {
  BigInt prod = 1;
  for (std::size_t l = 0; l < bs.m(); ++l) {
    prod *= binomial(bs.block(l).length, t[l]) * big_pow(q - 1, t[l]);
  }
  return prod;
}

BigInt sphere_size(std::uint32_t q, const BlockStructure& bs, std::uint64_t s) {
  BigInt total = 0;
  for (const TWeight& t : lambda_set(s, bs)) total += t_weight_class_size(q, bs, t);
  return total;
}

std::vector<BigInt> weight_distribution(std::uint32_t q, const BlockStructure& bs,
                                        std::uint64_t r) {
  const std::uint64_t top = std::min<std::uint64_t>(r, bs.max_weight());
  std::vector<BigInt> dist(top + 1, 0);
  dist[0] = 1;
  for (const Block& b : bs.blocks()) {
    std::vector<BigInt> next(top + 1, 0);
    for (std::uint32_t w = 0; w <= b.length; ++w) {
      const std::uint64_t shift = std::uint64_t{w} * b.scaling;
      if (shift > top) break;
      const BigInt coeff = binomial(b.length, w) * big_pow(q - 1, w);
      for (std::uint64_t s = 0; s + shift <= top; ++s) {
        if (dist[s] != 0) next[s + shift] += coeff * dist[s];
      }
    }
    dist = std::move(next);
  }
  return dist;
}

BigInt ball_size(std::uint32_t q, const BlockStructure& bs, std::uint64_t r) {
  BigInt total = 0;
  for (const BigInt& v : weight_distribution(q, bs, r)) total += v;
  return total;
}

}  // namespace whm
