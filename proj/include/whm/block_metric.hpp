#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whm/field.hpp"

namespace whm {

struct Block {
  std::uint32_t length;
  std::uint32_t scaling;
  bool operator==(const Block&) const = default;
};

/// Coordinate partition into m consecutive blocks, each with a positive
/// integer scaling factor.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<Block> blocks);
  /// Parses "n1:l1,n2:l2,..." such as "7:1,7:2".
  static BlockStructure parse(std::string_view text);
  /// Single block of length n with scaling 1, i.e. the Hamming metric.
  static BlockStructure hamming(std::uint32_t n) { return BlockStructure({{n, 1}}); }

  std::size_t m() const noexcept { return blocks_.size(); }
  std::size_t n() const noexcept { return n_; }
  /// Largest possible weight, sum of n_l * lambda_l.
  std::uint64_t max_weight() const noexcept { return max_weight_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t l) const noexcept { return blocks_[l]; }
  /// First coordinate of block l.
  std::size_t offset(std::size_t l) const noexcept { return offsets_[l]; }
  std::uint32_t max_scaling() const noexcept;
  std::vector<std::uint32_t> scalings() const;

  /// Blocks reordered by nondecreasing scaling (stable).
  BlockStructure sorted_by_scaling() const;

  std::string to_string() const;
  bool operator==(const BlockStructure& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t n_ = 0;
  std::uint64_t max_weight_ = 0;
};

/// Per-block Hamming weights of a vector.
struct TWeight {
  std::vector<std::uint32_t> w;

  std::size_t size() const noexcept { return w.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return w[i]; }
  bool is_zero() const noexcept;
  /// Weighted sum sum_l lambda_l * w_l.
  std::uint64_t weighted(const BlockStructure& bs) const;
  std::string to_string() const;

  auto operator<=>(const TWeight&) const = default;
};

/// Turns a position bitmask (see kernels::nonzero_mask) into per-block counts.
class BlockCounter {
 public:
  explicit BlockCounter(const BlockStructure& bs);

  std::size_t words() const noexcept { return words_; }
  void counts(std::span<const std::uint64_t> mask, std::span<std::uint32_t> out) const noexcept;
  std::uint64_t weight(std::span<const std::uint64_t> mask) const noexcept;

 private:
  struct Part {
    std::uint32_t block;
    std::uint32_t word;
    std::uint64_t bits;
  };
  std::vector<Part> parts_;
  std::vector<std::uint32_t> scaling_;
  std::size_t words_;
};

TWeight t_weight(std::span<const Elem> v, const BlockStructure& bs);
std::uint64_t wh_weight(std::span<const Elem> v, const BlockStructure& bs);
/// Weight of x - y; only the positions where x and y differ matter.
std::uint64_t wh_distance(std::span<const Elem> x, std::span<const Elem> y,
                          const BlockStructure& bs);

struct ScalingFit {
  /// lambda'_l = ln((1 - rho_l) / rho_l) + ln(q - 1); natural log, only ratios matter.
  std::vector<double> real_weights;
  /// Best proportional integer tuple with entries <= cap and gcd 1.
  std::vector<std::uint32_t> integer_weights;
  /// max_l |lambda_l / alpha - lambda'_l| / lambda'_l for the best alpha.
  double scale_error = 0.0;
};

/// Decoder weights that turn minimum-distance decoding into ML decoding for
/// parallel q-ary symmetric channels with crossover probabilities `rhos`.
ScalingFit optimal_scalings(std::span<const double> rhos, std::uint32_t q, std::uint32_t cap = 64);

/// Throws InvalidCrossover unless 0 < rho < 1 - 1/q.
void check_crossover(double rho, std::uint32_t q);

}  // namespace whm
