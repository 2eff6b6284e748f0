#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace whm {

/// Field element; always reduced into [0, q).
using Elem = std::uint16_t;
using Vector = std::vector<Elem>;

/// Prime field F_q with q < 2^16.
class Field {
 public:
  /// Throws CompositeModulus when q is not prime, InvalidParameter when q is
  /// outside [2, 65535].
  explicit Field(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = std::uint32_t{a} + b;
    return static_cast<Elem>(s >= q_ ? s - q_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(a >= b ? a - b : a + q_ - b);
  }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>(a == 0 ? 0 : q_ - a); }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint32_t{a} * b) % q_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Reduces an arbitrary integer into the field.
  Elem from_int(std::int64_t v) const noexcept;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols_if_empty = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  std::vector<std::vector<Elem>> to_rows() const;

  /// Columns [begin, begin+count).
  Matrix column_slice(std::size_t begin, std::size_t count) const;
  Matrix transpose() const;
  /// Stacks `below` under this matrix (column counts must agree).
  Matrix vstack(const Matrix& below) const;
  /// Places `right` next to this matrix (row counts must agree).
  Matrix hstack(const Matrix& right) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Pivot rows are taken as the first remaining row
/// with a nonzero entry in the pivot column; zero rows stay at the bottom.
RrefResult rref(const Field& f, const Matrix& m);

std::size_t rank(const Field& f, const Matrix& m);

/// Basis of {x : M x^T = 0}, one basis vector per row.
Matrix kernel_basis(const Field& f, const Matrix& m);

/// M v^T.
Vector mat_vec(const Field& f, const Matrix& m, std::span<const Elem> v);

/// A B.
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);

/// Throws InvalidParameter if some entry is not in [0, q).
void check_entries(const Field& f, const Matrix& m);

}  // namespace whm
