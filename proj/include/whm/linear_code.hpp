#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "whm/bigint.hpp"
#include "whm/block_metric.hpp"
#include "whm/field.hpp"

namespace whm {

/// Work limits for the exhaustive routines.
struct Budgets {
  /// Max q^k for anything that walks the codebook.
  std::uint64_t codewords = std::uint64_t{1} << 24;
  /// Max q^n for routines that walk the ambient space.
  std::uint64_t ambient = std::uint64_t{1} << 20;
  /// Max candidate vectors examined by support enumeration.
  std::uint64_t support_candidates = std::uint64_t{1} << 32;
};

/// q^e, or nullopt if it exceeds `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit);

/// Linear code over a prime field with a block structure. The stored generator
/// is in reduced row-echelon form; the parity-check matrix has full row rank.
class LinearCode {
 public:
  static LinearCode from_generator(const Field& field, const BlockStructure& bs, const Matrix& g);
  static LinearCode from_parity_check(const Field& field, const BlockStructure& bs,
                                      const Matrix& h);

  const Field& field() const noexcept { return field_; }
  const BlockStructure& blocks() const noexcept { return bs_; }
  const Matrix& generator() const noexcept { return generator_; }
  const Matrix& parity_check() const noexcept { return parity_check_; }
  std::size_t k() const noexcept { return generator_.rows(); }
  std::size_t n() const noexcept { return generator_.cols(); }

  /// Same code with another block structure of the same length.
  LinearCode with_blocks(const BlockStructure& bs) const;
  /// The dual code (parity-check matrix used as generator).
  LinearCode dual() const;

  Vector encode(std::span<const Elem> message) const;
  Vector syndrome(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;

 private:
  LinearCode(Field f, BlockStructure bs, Matrix g, Matrix h)
      : field_(f), bs_(std::move(bs)), generator_(std::move(g)), parity_check_(std::move(h)) {}

  Field field_;
  BlockStructure bs_;
  Matrix generator_;
  Matrix parity_check_;
};

/// Steps through the codebook in message-lexicographic order. Each step adds
/// generator rows to the running codeword; no per-word encoding.
class CodewordWalker {
 public:
  /// Throws BudgetExceeded when q^k > budgets.codewords.
  explicit CodewordWalker(const LinearCode& code, const Budgets& budgets = {});

  /// Starts at the zero codeword.
  const Vector& codeword() const noexcept { return word_; }
  const Vector& message() const noexcept { return message_; }
  /// Moves to the next codeword; false after the last one.
  bool advance();
  std::uint64_t size() const noexcept { return size_; }

 private:
  const LinearCode* code_;
  Vector message_;
  Vector word_;
  std::uint64_t size_;
};

/// Calls `visit` once per codeword, messages in lexicographic order (last
/// message symbol fastest). The span is only valid during the call. Throws
/// BudgetExceeded when q^k > budgets.codewords.
void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const Elem>)>& visit,
                       const Budgets& budgets = {});

std::vector<Vector> enumerate_codewords(const LinearCode& code, const Budgets& budgets = {});

enum class DistanceMethod { Auto, Codebook, SupportEnum };

struct DistanceResult {
  std::uint64_t distance = 0;
  /// A nonzero codeword of weight `distance`.
  Vector witness;
  DistanceMethod method = DistanceMethod::Auto;
  /// Codewords or candidate vectors examined.
  std::uint64_t examined = 0;
};

/// Exact minimum weighted-Hamming distance.
///  - Codebook: minimum weight over all nonzero codewords.
///  - SupportEnum: for t = 1, 2, ... walk every T-weight in lambda_set(t), every
///    support and every nonzero value assignment (first nonzero entry fixed to
///    1); the first t with a vector in the kernel of H is d.
///  - Auto: Codebook iff q^k fits budgets.codewords.
DistanceResult min_wh_distance(const LinearCode& code, DistanceMethod method = DistanceMethod::Auto,
                               const Budgets& budgets = {});

/// Support enumeration restricted to weights [1, max_weight]; nullopt when no
/// nonzero codeword that light exists.
std::optional<DistanceResult> find_light_codeword(const LinearCode& code, std::uint64_t max_weight,
                                                  const Budgets& budgets = {});

/// T-weight enumerator: number of codewords per T-weight (zero entries omitted).
class TWeightEnumerator {
 public:
  TWeightEnumerator() = default;
  explicit TWeightEnumerator(std::map<TWeight, BigInt> counts) : counts_(std::move(counts)) {}

  const std::map<TWeight, BigInt>& counts() const noexcept { return counts_; }
  BigInt count(const TWeight& t) const;
  BigInt total() const;
  void add(const TWeight& t, const BigInt& c);

  bool operator==(const TWeightEnumerator&) const = default;

 private:
  std::map<TWeight, BigInt> counts_;
};

TWeightEnumerator t_weight_enumerator(const LinearCode& code, const Budgets& budgets = {});

/// min over subset sums s of the multiset {lambda_l with multiplicity t_l} of
/// max(s, W - s), W the weight of t. This is the best split of a codeword of
/// T-weight t into r and c - r.
std::uint64_t split_cost(const TWeight& t, const BlockStructure& bs);

/// Guaranteed error-correction capability tau(C): every error of weight <= tau
/// is uniquely decodable. Computed from the T-weight enumerator via split_cost.
/// Throws ZeroCode for k = 0 (cannot be constructed) and BudgetExceeded.
std::uint64_t tau(const LinearCode& code, const Budgets& budgets = {});

/// Literal min over c != 0 and r in F_q^n of max(wt(r), wt(c - r)) - 1.
/// Throws BudgetExceeded when q^n > budgets.ambient.
std::uint64_t tau_oracle(const LinearCode& code, const Budgets& budgets = {});

struct RandomCode {
  LinearCode code;
  /// Generator draws rejected for rank deficiency.
  std::uint32_t retries = 0;
};

/// Generator with i.i.d. uniform entries from Rng(seed), redrawn until it has
/// rank k.
RandomCode random_code(const Field& field, const BlockStructure& bs, std::size_t k,
                       std::uint64_t seed);

}  // namespace whm
