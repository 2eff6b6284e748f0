#include "whm/field.hpp"

#include <string>
#include <utility>

#include "whm/error.hpp"

namespace whm {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 65535) {
    throw Error(ErrorKind::InvalidParameter,
                "field size " + std::to_string(q) + " outside [2, 65535]");
  }
  if (!is_prime(q)) {
    throw Error(ErrorKind::CompositeModulus, "q = " + std::to_string(q) + " is not prime");
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  return from_int(t0);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = static_cast<Elem>(1 % q_);
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Elem>(r);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::MalformedInput, "ragged matrix: row " + std::to_string(r) +
                                                 " has " + std::to_string(rows[r].size()) +
                                                 " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::column_slice(std::size_t begin, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, begin + c);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorKind::LengthMismatch, "vstack column mismatch");
  Matrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) throw Error(ErrorKind::LengthMismatch, "hstack row mismatch");
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

RrefResult rref(const Field& f, const Matrix& input) {
  RrefResult out{input, 0, {}};
  Matrix& m = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(pivot_row, c));
    }
    const Elem scale = f.inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) = f.mul(m(pivot_row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      const Elem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(pivot_row, c)));
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

Matrix kernel_basis(const Field& f, const Matrix& input) {
  const RrefResult red = rref(f, input);
  const std::size_t n = input.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;

  Matrix basis(n - red.rank, n);
  std::size_t out_row = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(out_row, free_col) = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      basis(out_row, red.pivot_columns[i]) = f.neg(red.matrix(i, free_col));
    }
    ++out_row;
  }
  return basis;
}

Vector mat_vec(const Field& f, const Matrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::LengthMismatch, "vector length " + std::to_string(v.size()) +
                                               " != matrix columns " + std::to_string(m.cols()));
  }
  Vector out(m.rows(), 0);
  const std::uint64_t q = f.q();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < v.size(); ++c) acc = (acc + std::uint64_t{row[c]} * v[c]) % q;
    out[r] = static_cast<Elem>(acc);
  }
  return out;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::LengthMismatch, "mat_mul shape mismatch");
  Matrix out(a.rows(), b.cols());
  const std::uint64_t q = f.q();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc = (acc + std::uint64_t{a(i, t)} * b(t, j)) % q;
      out(i, j) = static_cast<Elem>(acc);
    }
  return out;
}

void check_entries(const Field& f, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (Elem e : m.row(r))
      if (e >= f.q()) {
        throw Error(ErrorKind::InvalidParameter,
                    "matrix entry " + std::to_string(e) + " not in [0, " + std::to_string(f.q()) + ")");
      }
}

}  // namespace whm
