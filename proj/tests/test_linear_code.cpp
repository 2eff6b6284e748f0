#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "whm/ball.hpp"
#include "whm/constructions.hpp"
#include "whm/error.hpp"
#include "whm/linear_code.hpp"

using namespace whm;

namespace {

const Field F2(2);
const BlockStructure B12({{4, 1}, {4, 2}});
const BlockStructure B27({{4, 2}, {4, 7}});

Matrix example1_g() {
  return Matrix::from_rows({{1, 0, 0, 0, 0, 1, 1, 1},
                            {0, 1, 0, 0, 1, 0, 1, 1},
                            {0, 0, 1, 0, 1, 1, 0, 1},
                            {0, 0, 0, 1, 1, 1, 1, 0}});
}

Matrix example2_g() { return Matrix(4, 4).hstack(Matrix::identity(4)); }

LinearCode hamming74() {
  return LinearCode::from_parity_check(F2, BlockStructure::hamming(7), binary_hamming_parity(3));
}

TWeight tw(std::initializer_list<std::uint32_t> w) { return TWeight{std::vector<std::uint32_t>(w)}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::LpInternal;
}

// Literal definition over the whole ambient space, no pruning.
std::uint64_t tau_brute(const Matrix& g, std::uint32_t q, const BlockStructure& bs) {
  const auto words = oracle::codewords(g, q);
  std::uint64_t best = UINT64_MAX;
  oracle::for_each_vector(q, bs.n(), [&](const Vector& r) {
    const auto wr = oracle::weight(r, bs);
    for (const auto& c : words) {
      Vector diff(r.size());
      bool zero = true;
      for (std::size_t i = 0; i < r.size(); ++i) {
        diff[i] = static_cast<Elem>((c[i] + q - r[i]) % q);
        zero = zero && c[i] == 0;
      }
      if (zero) continue;
      best = std::min(best, std::max(wr, oracle::weight(diff, bs)));
    }
  });
  return best - 1;
}

}  // namespace

TEST_CASE("construction from generator and parity check") {
  const auto c1 = LinearCode::from_generator(F2, B12, example1_g());
  CHECK(c1.k() == 4);
  CHECK(c1.n() == 8);
  CHECK(LinearCode::from_generator(F2, B27, example2_g()).k() == 4);
  CHECK(LinearCode::from_generator(F2, B12, example1_g().vstack(example1_g())).k() == 4);
  CHECK(kind_of([] { LinearCode::from_generator(F2, B12, Matrix(2, 8)); }) == ErrorKind::ZeroCode);
  CHECK(kind_of([] { LinearCode::from_parity_check(F2, B12, Matrix::identity(8)); }) == ErrorKind::ZeroCode);
  CHECK(LinearCode::from_parity_check(F2, B12, Matrix(1, 8)).k() == 8);
  CHECK(kind_of([] { LinearCode::from_generator(F2, B12, Matrix::identity(7)); }) == ErrorKind::LengthMismatch);

  // G H^T = 0 and the ranks add up
  std::uint64_t state = 5;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    Field f(q);
    for (int t = 0; t < 20; ++t) {
      const auto bs = BlockStructure({{3, 1}, {4, 2}});
      Matrix g = oracle::random_matrix(q, 1 + t % 5, 7, state);
      if (rank(f, g) == 0) continue;
      const auto c = LinearCode::from_generator(f, bs, g);
      CHECK(c.k() + c.parity_check().rows() == 7);
      CHECK(mat_mul(f, c.generator(), c.parity_check().transpose()) == Matrix(c.k(), c.parity_check().rows()));
      CHECK(rank(f, g.vstack(c.generator())) == c.k());
      const auto back = LinearCode::from_parity_check(f, bs, c.parity_check());
      CHECK(back.generator() == c.generator());
    }
  }
}

TEST_CASE("encode, syndrome, contains") {
  const auto c = LinearCode::from_generator(F2, B12, example1_g());
  const Vector w = c.encode(Vector{1, 1, 0, 0});
  CHECK(w == Vector{1, 1, 0, 0, 1, 1, 0, 0});
  CHECK(c.contains(w));
  CHECK(c.syndrome(w) == Vector(c.parity_check().rows(), 0));
  Vector e = w;
  e[0] ^= 1;
  CHECK_FALSE(c.contains(e));
}

TEST_CASE("codeword enumeration") {
  const auto c = LinearCode::from_generator(F2, B12, example1_g());
  const auto words = enumerate_codewords(c);
  CHECK(words.size() == 16);
  CHECK(std::set<Vector>(words.begin(), words.end()).size() == 16);
  const auto ref = oracle::codewords(c.generator(), 2);
  CHECK(std::set<Vector>(words.begin(), words.end()) == std::set<Vector>(ref.begin(), ref.end()));
  // walker order equals message order
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i] == ref[i]);

  const Field f3(3);
  const auto c3 = LinearCode::from_generator(f3, BlockStructure::hamming(4),
                                             Matrix::from_rows({{1, 0, 2, 1}, {0, 1, 1, 2}}));
  const auto w3 = enumerate_codewords(c3);
  const auto r3 = oracle::codewords(c3.generator(), 3);
  CHECK(w3 == r3);

  const auto one = LinearCode::from_generator(F2, BlockStructure::hamming(3), Matrix::from_rows({{1, 1, 1}}));
  CHECK(enumerate_codewords(one).size() == 2);

  const Field f7(7);
  std::uint64_t state = 3;
  const auto rs = LinearCode::from_generator(f7, BlockStructure::parse("7:1,7:2"),
                                             Matrix::identity(10).hstack(oracle::random_matrix(7, 10, 4, state)));
  CHECK(kind_of([&] { enumerate_codewords(rs); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("minimum distance: the two example codes") {
  const auto c1 = LinearCode::from_generator(F2, B12, example1_g());
  const auto c2 = LinearCode::from_generator(F2, B27, example2_g());
  for (auto m : {DistanceMethod::Auto, DistanceMethod::Codebook, DistanceMethod::SupportEnum}) {
    const auto r1 = min_wh_distance(c1, m);
    CHECK(r1.distance == 5);
    CHECK(c1.contains(r1.witness));
    CHECK(wh_weight(r1.witness, B12) == 5);
    CHECK(min_wh_distance(c2, m).distance == 7);
  }
  CHECK(min_wh_distance(hamming74()).distance == 3);
  CHECK(!find_light_codeword(c1, 4).has_value());
  CHECK(find_light_codeword(c1, 5)->distance == 5);
}

TEST_CASE("minimum distance: codebook equals support enumeration") {
  std::uint64_t state = 99;
  int compared = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    Field f(q);
    for (int t = 0; t < 30; ++t) {
      const BlockStructure bs = t % 2 ? BlockStructure({{3, 1}, {3, 3}}) : BlockStructure({{2, 2}, {2, 1}, {2, 5}});
      const Matrix g = oracle::random_matrix(q, 1 + t % 4, bs.n(), state);
      if (rank(f, g) == 0) continue;
      const auto c = LinearCode::from_generator(f, bs, g);
      const auto a = min_wh_distance(c, DistanceMethod::Codebook);
      const auto b = min_wh_distance(c, DistanceMethod::SupportEnum);
      CHECK(a.distance == b.distance);
      CHECK(a.distance == oracle::min_distance(g, q, bs));
      CHECK(c.contains(b.witness));
      CHECK(wh_weight(b.witness, bs) == b.distance);
      ++compared;
    }
  }
  CHECK(compared > 70);
}

TEST_CASE("t-weight enumerator") {
  const auto c1 = LinearCode::from_generator(F2, B12, example1_g());
  const std::map<TWeight, std::uint64_t> want{
      {tw({0, 0}), 1}, {tw({1, 3}), 4}, {tw({2, 2}), 6}, {tw({3, 1}), 4}, {tw({4, 4}), 1}};
  CHECK(oracle::to_map(t_weight_enumerator(c1)) == want);

  const auto full = LinearCode::from_generator(F2, BlockStructure({{1, 1}, {1, 1}}), Matrix::identity(2));
  const std::map<TWeight, std::uint64_t> four{{tw({0, 0}), 1}, {tw({0, 1}), 1}, {tw({1, 0}), 1}, {tw({1, 1}), 1}};
  CHECK(oracle::to_map(t_weight_enumerator(full)) == four);

  const std::map<TWeight, std::uint64_t> ham{{tw({0}), 1}, {tw({3}), 7}, {tw({4}), 7}, {tw({7}), 1}};
  CHECK(oracle::to_map(t_weight_enumerator(hamming74())) == ham);

  std::uint64_t state = 7;
  Field f3(3);
  for (int t = 0; t < 10; ++t) {
    const BlockStructure bs({{2, 1}, {3, 2}});
    const Matrix g = oracle::random_matrix(3, 2, 5, state);
    if (rank(f3, g) == 0) continue;
    const auto c = LinearCode::from_generator(f3, bs, g);
    CHECK(oracle::to_map(t_weight_enumerator(c)) == oracle::enumerator(oracle::codewords(c.generator(), 3), bs));
    CHECK(t_weight_enumerator(c).total() == big_pow(3, c.k()));
  }
}

TEST_CASE("split cost") {
  CHECK(split_cost(tw({0, 1}), B27) == 7);
  CHECK(split_cost(tw({2, 0}), B12) == 1);
  CHECK(split_cost(tw({1, 1}), B12) == 2);
  CHECK(split_cost(tw({1, 3}), B12) == 4);
  // no even split: weights 1 and 7
  CHECK(split_cost(tw({1, 1}), BlockStructure({{4, 1}, {4, 7}})) == 7);
}

TEST_CASE("tau: example codes and oracle") {
  const auto c1 = LinearCode::from_generator(F2, B12, example1_g());
  const auto c2 = LinearCode::from_generator(F2, B27, example2_g());
  CHECK(tau(c2) == 6);
  CHECK(tau_oracle(c2) == 6);
  CHECK(tau(c1) == 2);
  CHECK(tau_oracle(c1) == 2);
  CHECK(tau_brute(example1_g(), 2, B12) == 2);
  CHECK(tau(hamming74()) == 1);
  CHECK(tau_oracle(hamming74()) == 1);
  const auto rep = LinearCode::from_generator(F2, BlockStructure::hamming(3), Matrix::from_rows({{1, 1, 1}}));
  CHECK(tau(rep) == 1);
  CHECK(tau_oracle(rep) == 1);
}

TEST_CASE("tau oracle agrees with the unpruned definition") {
  std::uint64_t state = 31;
  for (std::uint32_t q : {2u, 3u}) {
    Field f(q);
    for (int t = 0; t < 12; ++t) {
      const BlockStructure bs = q == 2 ? BlockStructure({{3, 1}, {3, 3}}) : BlockStructure({{2, 1}, {2, 2}});
      const Matrix g = oracle::random_matrix(q, 1 + t % 3, bs.n(), state);
      if (rank(f, g) == 0) continue;
      const auto c = LinearCode::from_generator(f, bs, g);
      const auto want = tau_brute(c.generator(), q, bs);
      CHECK(tau_oracle(c) == want);
      CHECK(tau(c) == want);
    }
  }
}

TEST_CASE("tau bounds against the distance") {
  // floor((d-1)/2) <= tau <= floor((d + lambda_max)/2) - 1
  std::uint64_t state = 77;
  for (int t = 0; t < 60; ++t) {
    const BlockStructure bs({{3, 1}, {2, 2}, {3, 5}});
    const Matrix g = oracle::random_matrix(2, 1 + t % 4, bs.n(), state);
    if (rank(F2, g) == 0) continue;
    const auto c = LinearCode::from_generator(F2, bs, g);
    const auto d = min_wh_distance(c).distance;
    const auto tv = tau(c);
    CHECK((d - 1) / 2 <= tv);
    CHECK(tv <= (d + bs.max_scaling()) / 2 - 1);
  }
}

TEST_CASE("tau budget") {
  const Field f7(7);
  const auto bs = BlockStructure::parse("7:1,7:2");
  std::uint64_t state = 1;
  const auto c = LinearCode::from_generator(f7, bs, Matrix::identity(3).hstack(oracle::random_matrix(7, 3, 11, state)));
  CHECK(kind_of([&] { tau_oracle(c); }) == ErrorKind::BudgetExceeded);
  CHECK_NOTHROW(tau(c));
}

TEST_CASE("random codes") {
  const auto bs = BlockStructure::parse("7:1,7:2");
  const auto a = random_code(F2, bs, 6, 42);
  const auto b = random_code(F2, bs, 6, 42);
  CHECK(a.code.generator() == b.code.generator());
  CHECK(a.code.k() == 6);
  CHECK(random_code(F2, bs, 6, 43).code.generator() != a.code.generator());
  // golden: frozen from the first run of this generator
  CHECK(min_wh_distance(a.code).distance == 3);
  CHECK(oracle::min_distance(a.code.generator(), 2, bs) == 3);

  const auto full = random_code(Field(3), BlockStructure({{2, 3}, {2, 2}}), 4, 9);
  CHECK(full.code.k() == 4);
  CHECK(min_wh_distance(full.code).distance == 2);
  CHECK(kind_of([&] { random_code(F2, bs, 15, 1); }) == ErrorKind::InvalidDimension);
  CHECK(kind_of([&] { random_code(F2, bs, 0, 1); }) == ErrorKind::InvalidDimension);
}
