#include "whm/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "whm/error.hpp"

namespace whm {

LinearCode reed_solomon(const Field& field, const BlockStructure& bs, std::size_t k) {
  const std::size_t n = bs.n();
  if (n > field.q()) {
    throw Error(ErrorKind::LengthExceedsField, "RS length " + std::to_string(n) +
                                                   " exceeds the field size " + std::to_string(field.q()));
  }
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidDimension,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  Matrix g(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = field.pow(static_cast<Elem>(j), i);
  return LinearCode::from_generator(field, bs, g);
}

Matrix binary_hamming_parity(unsigned m) {
  if (m < 2 || m > 15) throw Error(ErrorKind::InvalidParameter, "Hamming parity needs 2 <= m <= 15");
  const std::size_t n = (std::size_t{1} << m) - 1;
  Matrix h(m, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (unsigned r = 0; r < m; ++r) h(r, j - 1) = static_cast<Elem>((j >> (m - 1 - r)) & 1u);
  return h;
}

namespace {

// Primitive polynomials, bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 11> kPrimitive = {
    0, 0, 0,
    0b1011,          // x^3 + x + 1
    0b10011,         // x^4 + x + 1
    0b100101,        // x^5 + x^2 + 1
    0b1000011,       // x^6 + x + 1
    0b10001001,      // x^7 + x^3 + 1
    0b100011101,     // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,    // x^9 + x^4 + 1
    0b10000001001,   // x^10 + x^3 + 1
};

std::uint32_t gf2m_mul(std::uint32_t a, std::uint32_t b, unsigned m) {
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m) a ^= kPrimitive[m];
  }
  return acc;
}

}  // namespace

Matrix binary_bch_extension(unsigned m) {
  if (m < 3 || m >= kPrimitive.size()) {
    throw Error(ErrorKind::InvalidParameter, "BCH extension supports 3 <= m <= 10");
  }
  const std::size_t n = (std::size_t{1} << m) - 1;
  Matrix h(m, n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    const std::uint32_t cube = gf2m_mul(gf2m_mul(j, j, m), j, m);
    for (unsigned r = 0; r < m; ++r) h(r, j - 1) = static_cast<Elem>((cube >> (m - 1 - r)) & 1u);
  }
  return h;
}

std::string_view family_name(Family f) noexcept { return f == Family::Binary ? "binary" : "mds"; }

Family parse_family(std::string_view s) {
  if (s == "binary") return Family::Binary;
  if (s == "mds") return Family::Mds;
  throw Error(ErrorKind::MalformedInput, "unknown family '" + std::string(s) + "'");
}

ConstructedCode ConstructedCode::build(const Field& field, std::uint32_t n1, std::uint32_t n2,
                                       Family family) {
  if (n1 < 5) {
    throw Error(ErrorKind::InvalidParameter,
                "n1 = " + std::to_string(n1) + " < 5: block 1 must carry a distance-5 code");
  }
  if (n2 < 3) {
    throw Error(ErrorKind::InvalidParameter,
                "n2 = " + std::to_string(n2) + " < 3: block 2 must carry a distance-3 code");
  }
  Matrix h1, h2, h3;
  if (family == Family::Binary) {
    if (field.q() != 2) throw Error(ErrorKind::InvalidParameter, "binary family requires q = 2");
    unsigned m = 3;
    while (((std::uint32_t{1} << m) - 1) < std::max(n1, n2)) ++m;
    if (m >= kPrimitive.size()) {
      throw Error(ErrorKind::InvalidParameter, "binary family supports block lengths up to 1023");
    }
    const Matrix ham = binary_hamming_parity(m);
    const Matrix bch = binary_bch_extension(m);
    h1 = bch.column_slice(0, n1);
    h2 = ham.column_slice(0, n2);
    h3 = ham.column_slice(0, n1);
  } else {
    if (field.q() < std::max(n1, n2)) {
      throw Error(ErrorKind::InvalidParameter, "mds family requires q >= max(n1, n2) (q = " +
                                                   std::to_string(field.q()) + ")");
    }
    auto vandermonde = [&](std::uint32_t len, unsigned first_power) {
      Matrix v(2, len);
      for (std::uint32_t j = 0; j < len; ++j) {
        v(0, j) = field.pow(static_cast<Elem>(j), first_power);
        v(1, j) = field.pow(static_cast<Elem>(j), first_power + 1);
      }
      return v;
    };
    h1 = vandermonde(n1, 2);
    h2 = vandermonde(n2, 0);
    h3 = vandermonde(n1, 0);
  }
  return from_parts(field, family, std::move(h1), std::move(h2), std::move(h3));
}

ConstructedCode ConstructedCode::from_parts(const Field& field, Family family, Matrix h1, Matrix h2,
                                            Matrix h3) {
  if (h1.cols() != h3.cols() || h1.rows() != h2.rows()) {
    throw Error(ErrorKind::InvalidParameter, "H1/H2/H3 shapes are inconsistent");
  }
  for (const Matrix* m : {&h1, &h2, &h3}) check_entries(field, *m);
  const BlockStructure bs({{static_cast<std::uint32_t>(h1.cols()), 1},
                           {static_cast<std::uint32_t>(h2.cols()), 2}});
  const Matrix composite = h1.hstack(h2).vstack(h3.hstack(Matrix(h3.rows(), h2.cols())));
  ConstructedCode cc(LinearCode::from_parity_check(field, bs, composite), family, std::move(h1),
                     std::move(h2), std::move(h3));
  cc.build_tables();
  return cc;
}

Matrix ConstructedCode::composite_parity_check() const {
  return h1_.hstack(h2_).vstack(h3_.hstack(Matrix(h3_.rows(), h2_.cols())));
}

void ConstructedCode::build_tables() {
  const Field& f = code_.field();
  const Elem q = static_cast<Elem>(f.q());
  const Matrix stacked = h1_.vstack(h3_);
  const std::size_t r1 = h1_.rows();

  auto insert = [](std::map<Vector, Vector>& table, Vector syn, const Vector& e, const char* what) {
    auto [it, fresh] = table.emplace(std::move(syn), e);
    if (!fresh) {
      throw Error(ErrorKind::InvalidParameter,
                  std::string(what) + " syndromes collide: component code distance too small");
    }
  };
  auto check_h3_detects = [&](const Vector& syn) {
    if (std::all_of(syn.begin() + r1, syn.end(), [](Elem e) { return e == 0; })) {
      throw Error(ErrorKind::InvalidParameter,
                  "H3 misses an error of Hamming weight <= 2: H3 needs distance >= 3");
    }
  };

  const std::size_t n1 = h1_.cols();
  Vector e1(n1, 0);
  for (std::size_t i = 0; i < n1; ++i) {
    for (Elem a = 1; a < q; ++a) {
      e1[i] = a;
      Vector syn = mat_vec(f, stacked, e1);
      check_h3_detects(syn);
      insert(inner_, std::move(syn), e1, "block-1");
      for (std::size_t j = i + 1; j < n1; ++j) {
        for (Elem b = 1; b < q; ++b) {
          e1[j] = b;
          Vector syn2 = mat_vec(f, stacked, e1);
          check_h3_detects(syn2);
          insert(inner_, std::move(syn2), e1, "block-1");
        }
        e1[j] = 0;
      }
    }
    e1[i] = 0;
  }

  const std::size_t n2 = h2_.cols();
  Vector e2(n2, 0);
  for (std::size_t i = 0; i < n2; ++i) {
    for (Elem a = 1; a < q; ++a) {
      e2[i] = a;
      Vector syn = mat_vec(f, h2_, e2);
      if (std::all_of(syn.begin(), syn.end(), [](Elem e) { return e == 0; })) {
        throw Error(ErrorKind::InvalidParameter, "H2 has a zero column: H2 needs distance >= 3");
      }
      insert(outer_, std::move(syn), e2, "block-2");
    }
    e2[i] = 0;
  }
}

std::optional<Vector> ConstructedCode::decode(std::span<const Elem> received) const {
  const Field& f = code_.field();
  const std::size_t n1 = h1_.cols();
  const std::size_t n2 = h2_.cols();
  if (received.size() != n1 + n2) {
    throw Error(ErrorKind::LengthMismatch, "received length " + std::to_string(received.size()) +
                                               " != " + std::to_string(n1 + n2));
  }
  const auto r1 = received.first(n1);
  const auto r2 = received.subspan(n1);
  const Vector s3 = mat_vec(f, h3_, r1);
  Vector top = mat_vec(f, h1_, r1);
  const Vector top2 = mat_vec(f, h2_, r2);
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = f.add(top[i], top2[i]);
  auto is_zero = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }); };

  Vector error(n1 + n2, 0);
  if (is_zero(s3)) {
    // Block 1 is clean; at most one error in block 2.
    if (!is_zero(top)) {
      auto it = outer_.find(top);
      if (it == outer_.end()) return std::nullopt;
      std::copy(it->second.begin(), it->second.end(), error.begin() + n1);
    }
  } else {
    // Block 2 is clean; up to two errors in block 1.
    Vector key = top;
    key.insert(key.end(), s3.begin(), s3.end());
    auto it = inner_.find(key);
    if (it == inner_.end()) return std::nullopt;
    std::copy(it->second.begin(), it->second.end(), error.begin());
  }
  Vector out(received.begin(), received.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(out[i], error[i]);
  return out;
}

}  // namespace whm
