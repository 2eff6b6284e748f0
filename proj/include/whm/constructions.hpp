#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "whm/field.hpp"
#include "whm/linear_code.hpp"

namespace whm {

/// Reed-Solomon code: generator rows (a_j^i), i = 0..k-1, evaluation points
/// a_j = 0, 1, ..., n-1. Throws LengthExceedsField if n > q.
LinearCode reed_solomon(const Field& field, const BlockStructure& bs, std::size_t k);
inline LinearCode reed_solomon(const Field& field, std::size_t n, std::size_t k) {
  return reed_solomon(field, BlockStructure::hamming(static_cast<std::uint32_t>(n)), k);
}

/// m x (2^m - 1) binary matrix whose column j-1 is j in binary, most
/// significant bit in row 0. Throws InvalidParameter for m < 2.
Matrix binary_hamming_parity(unsigned m);

/// Rows whose column j-1 is beta^3 for the field element beta with binary
/// expansion j (bit i = coefficient of x^i) in F_{2^m} = F_2[x]/(p_m), same bit
/// layout as binary_hamming_parity. Stacked under the Hamming rows it is the
/// parity check of the double-error-correcting binary BCH code.
/// Supported m: 3..10 (p_3 = x^3+x+1, p_4 = x^4+x+1, ...).
Matrix binary_bch_extension(unsigned m);

enum class Family { Binary, Mds };

std::string_view family_name(Family f) noexcept;
Family parse_family(std::string_view s);

/// Two-block code with scalings (1, 2) and weighted distance 5:
///   H = [[H1, H2], [H3, 0]]
/// with H2, H3 distance-3 parity checks and (H1; H3) a distance-5 parity
/// check, plus the syndrome tables of its two-case decoder.
class ConstructedCode {
 public:
  /// binary: q = 2, n1 >= 5, n2 >= 3, Hamming/BCH columns of the smallest
  ///         m >= 3 with 2^m - 1 >= max(n1, n2) (shortened when shorter).
  /// mds:    n1 >= 5, n2 >= 3, q >= max(n1, n2); rows (1; a) and (a^2; a^3).
  static ConstructedCode build(const Field& field, std::uint32_t n1, std::uint32_t n2, Family family);

  /// Rebuilds from stored blocks; validates the distance requirements through
  /// the syndrome tables.
  static ConstructedCode from_parts(const Field& field, Family family, Matrix h1, Matrix h2,
                                    Matrix h3);

  const LinearCode& code() const noexcept { return code_; }
  Family family() const noexcept { return family_; }
  const Matrix& h1() const noexcept { return h1_; }
  const Matrix& h2() const noexcept { return h2_; }
  const Matrix& h3() const noexcept { return h3_; }
  std::uint32_t n1() const noexcept { return static_cast<std::uint32_t>(h1_.cols()); }
  std::uint32_t n2() const noexcept { return static_cast<std::uint32_t>(h2_.cols()); }
  /// The stacked matrix [[H1, H2], [H3, 0]].
  Matrix composite_parity_check() const;

  /// (H1; H3) syndrome -> block-1 error of Hamming weight 1 or 2.
  const std::map<Vector, Vector>& inner_table() const noexcept { return inner_; }
  /// H2 syndrome -> block-2 error of Hamming weight 1.
  const std::map<Vector, Vector>& outer_table() const noexcept { return outer_; }

  /// Corrects every error of weighted weight <= 2. Returns nullopt when the
  /// syndrome needed by the taken branch is not in its table.
  std::optional<Vector> decode(std::span<const Elem> received) const;

 private:
  ConstructedCode(LinearCode code, Family family, Matrix h1, Matrix h2, Matrix h3)
      : code_(std::move(code)), family_(family), h1_(std::move(h1)), h2_(std::move(h2)),
        h3_(std::move(h3)) {}
  void build_tables();

  LinearCode code_;
  Family family_;
  Matrix h1_, h2_, h3_;
  std::map<Vector, Vector> inner_;
  std::map<Vector, Vector> outer_;
};

}  // namespace whm
