#include "whm/bounds.hpp"

#include <string>

#include "whm/ball.hpp"
#include "whm/error.hpp"
#include "whm/lp.hpp"

namespace whm {

namespace {

void check_distance(std::uint64_t d, std::uint64_t upper) {
  if (d < 1 || d > upper) {
    throw Error(ErrorKind::InvalidDistance,
                "d = " + std::to_string(d) + " outside [1, " + std::to_string(upper) + "]");
  }
}

void check_q(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidParameter, "q must be >= 2");
}

}  // namespace

std::uint64_t singleton_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d) {
  check_q(q);
  check_distance(d, bs.max_weight());
  const BlockStructure sorted = bs.sorted_by_scaling();
  // l_star: number of leading blocks whose full weight stays below d (< m).
  std::size_t l_star = 0;
  std::uint64_t prefix = 0;
  while (l_star + 1 < sorted.m()) {
    const Block& b = sorted.block(l_star);
    const std::uint64_t next = prefix + std::uint64_t{b.length} * b.scaling;
    if (next >= d) break;
    prefix = next;
    ++l_star;
  }
  std::uint64_t tail = 0;
  for (std::size_t l = l_star; l < sorted.m(); ++l) tail += sorted.block(l).length;
  return tail - (d - 1 - prefix) / sorted.block(l_star).scaling;
}

std::uint64_t mds_wh_distance(std::uint32_t q, const BlockStructure& bs, std::uint64_t k) {
  check_q(q);
  if (k < 1 || k > bs.n()) {
    throw Error(ErrorKind::InvalidDimension,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(bs.n()) + "]");
  }
  const BlockStructure sorted = bs.sorted_by_scaling();
  const std::uint64_t support = bs.n() - k + 1;
  std::uint64_t covered = 0, weight = 0;
  std::size_t l = 0;
  while (l < sorted.m() && covered + sorted.block(l).length <= support) {
    covered += sorted.block(l).length;
    weight += std::uint64_t{sorted.block(l).length} * sorted.block(l).scaling;
    ++l;
  }
  if (l < sorted.m()) weight += (support - covered) * sorted.block(l).scaling;
  return weight;
}

std::uint64_t hamming_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d) {
  check_q(q);
  check_distance(d, bs.max_weight() + 1);
  const BigInt ball = ball_size(q, bs, (d - 1) / 2);
  const BigInt space = big_pow(q, bs.n());
  std::uint64_t k = 0;
  while (big_pow(q, k + 1) * ball <= space) ++k;
  return k;
}

std::uint64_t gv_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d) {
  check_q(q);
  check_distance(d, bs.max_weight());
  const BigInt ball = ball_size(q, bs, d - 1);
  const BigInt space = big_pow(q, bs.n());
  std::uint64_t k = 0;
  while (big_pow(q, k) * ball < space) ++k;
  return k;
}

std::optional<std::uint64_t> plotkin_bound(std::uint32_t q, const BlockStructure& bs,
                                           std::uint64_t d) {
  check_q(q);
  check_distance(d, bs.max_weight());
  // d > (q-1) M / q  <=>  d q > (q-1) M; then |C| <= d q / (d q - (q-1) M).
  const BigInt dq = BigInt(static_cast<unsigned long>(d)) * q;
  const BigInt avg_q = BigInt(static_cast<unsigned long>(bs.max_weight())) * (q - 1);
  if (dq <= avg_q) return std::nullopt;
  const Rational size_bound(dq, dq - avg_q);
  return floor_log(q, size_bound);
}

BigInt krawtchouk(std::uint32_t q, std::uint32_t n, std::uint32_t j, std::uint32_t i) {
  if (i > n || j > n) {
    throw Error(ErrorKind::InvalidParameter, "Krawtchouk indices must lie in [0, n]");
  }
  BigInt sum = 0;
  for (std::uint32_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    BigInt term = binomial(n - i, j - s) * binomial(i, s) * big_pow(q - 1, j - s);
    if (s % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

namespace {

// Per-block tables K_l[j][i].
class KrawtchoukTables {
 public:
  KrawtchoukTables(std::uint32_t q, const BlockStructure& bs) {
    for (const Block& b : bs.blocks()) {
      std::vector<std::vector<BigInt>> t(b.length + 1, std::vector<BigInt>(b.length + 1));
      for (std::uint32_t j = 0; j <= b.length; ++j)
        for (std::uint32_t i = 0; i <= b.length; ++i) t[j][i] = krawtchouk(q, b.length, j, i);
      tables_.push_back(std::move(t));
    }
  }

  BigInt product(const TWeight& j, const TWeight& i) const {
    BigInt p = 1;
    for (std::size_t l = 0; l < tables_.size(); ++l) {
      p *= tables_[l][j[l]][i[l]];
      if (p == 0) break;
    }
    return p;
  }

 private:
  std::vector<std::vector<std::vector<BigInt>>> tables_;
};

}  // namespace

TWeightEnumerator macwilliams_transform(const TWeightEnumerator& a, std::uint32_t q,
                                        const BlockStructure& bs, const BigInt& code_size) {
  check_q(q);
  if (code_size <= 0) throw Error(ErrorKind::InvalidParameter, "code size must be positive");
  if (a.total() != code_size) {
    throw Error(ErrorKind::NonIntegralTransform,
                "enumerator sums to " + a.total().get_str() + ", expected " + code_size.get_str());
  }
  for (const auto& [i, count] : a.counts()) {
    if (i.size() != bs.m()) throw Error(ErrorKind::LengthMismatch, "T-weight arity != m");
    for (std::size_t l = 0; l < bs.m(); ++l) {
      if (i[l] > bs.block(l).length) {
        throw Error(ErrorKind::InvalidParameter, "T-weight " + i.to_string() + " exceeds block length");
      }
    }
  }
  const KrawtchoukTables tables(q, bs);
  TWeightEnumerator out;
  for (const TWeight& j : all_t_weights(bs)) {
    BigInt sum = 0;
    for (const auto& [i, count] : a.counts()) sum += tables.product(j, i) * count;
    if (sum < 0 || !mpz_divisible_p(sum.get_mpz_t(), code_size.get_mpz_t())) {
      throw Error(ErrorKind::NonIntegralTransform,
                  "dual count at " + j.to_string() + " is " + sum.get_str() + "/" + code_size.get_str());
    }
    out.add(j, sum / code_size);
  }
  return out;
}

LpBound lp_bound(std::uint32_t q, const BlockStructure& bs, std::uint64_t d) {
  check_q(q);
  check_distance(d, bs.max_weight());
  const std::vector<TWeight> grid = all_t_weights(bs);
  const TWeight zero{std::vector<std::uint32_t>(bs.m(), 0)};

  // A_0 = 1 is substituted; the remaining unknowns are the T-weights of
  // weight >= d.
  std::vector<TWeight> vars;
  for (const TWeight& t : grid) {
    if (!t.is_zero() && t.weighted(bs) >= d) vars.push_back(t);
  }
  LpBound out;
  if (vars.empty()) {
    out.value = 1;
    out.k = 0;
    return out;
  }

  const KrawtchoukTables tables(q, bs);
  LpProblem lp;
  lp.c.assign(vars.size(), 1);
  // sum_i K_j(i) A_i >= 0 becomes -sum_{i != 0} K_j(i) x_i <= K_j(0).
  for (const TWeight& j : grid) {
    std::vector<Rational> row;
    row.reserve(vars.size());
    for (const TWeight& i : vars) row.emplace_back(-tables.product(j, i));
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(tables.product(j, zero));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw Error(ErrorKind::LpInternal, "LP bound program not solved to optimality");
  }
  out.value = sol.value + 1;
  out.k = floor_log(q, out.value);
  out.pivots = sol.pivots;
  return out;
}

BoundReport bound_report(std::uint32_t q, const BlockStructure& bs, std::uint64_t d) {
  const LpBound lp = lp_bound(q, bs, d);
  return BoundReport{q,
                     bs,
                     d,
                     singleton_bound(q, bs, d),
                     hamming_bound(q, bs, d),
                     gv_bound(q, bs, d),
                     plotkin_bound(q, bs, d),
                     lp.k,
                     lp.value};
}

std::vector<BoundReport> bounds_table(std::uint32_t q, const BlockStructure& bs,
                                      std::uint64_t d_first, std::uint64_t d_last) {
  if (d_first > d_last) throw Error(ErrorKind::InvalidDistance, "empty distance range");
  check_distance(d_first, bs.max_weight());
  check_distance(d_last, bs.max_weight());
  std::vector<BoundReport> out;
  for (std::uint64_t d = d_first; d <= d_last; ++d) out.push_back(bound_report(q, bs, d));
  return out;
}

}  // namespace whm
