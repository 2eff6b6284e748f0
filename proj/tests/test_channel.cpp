#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "whm/channel.hpp"
#include "whm/constructions.hpp"
#include "whm/error.hpp"

using namespace whm;

namespace {

const Field F2(2);
const BlockStructure B12({{4, 1}, {4, 2}});

LinearCode example1() {
  return LinearCode::from_generator(F2, B12,
                                    Matrix::from_rows({{1, 0, 0, 0, 0, 1, 1, 1},
                                                       {0, 1, 0, 0, 1, 0, 1, 1},
                                                       {0, 0, 1, 0, 1, 1, 0, 1},
                                                       {0, 0, 0, 1, 1, 1, 1, 0}}));
}

ChannelSpec two_channels() { return ChannelSpec(2, {0.125, 0.02}, B12); }

// Straight product over the symbols.
double prob_ref(const Vector& e, std::uint32_t q, const std::vector<double>& rho, const BlockStructure& bs) {
  const auto owner = oracle::block_of(bs);
  double p = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) p *= e[i] ? rho[owner[i]] / (q - 1) : 1.0 - rho[owner[i]];
  return p;
}

std::set<Vector> as_set(const std::vector<Vector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("pattern probabilities") {
  const auto spec = two_channels();
  const double p0 = pattern_probability(Vector(8, 0), spec);
  CHECK(p0 == doctest::Approx(std::pow(0.875, 4) * std::pow(0.98, 4)).epsilon(1e-14));
  CHECK(p0 == doctest::Approx(0.5406752812890624).epsilon(1e-14));
  const double p20 = pattern_probability(Vector{1, 1, 0, 0, 0, 0, 0, 0}, spec);
  const double p01 = pattern_probability(Vector{0, 0, 0, 0, 1, 0, 0, 0}, spec);
  CHECK(p20 == doctest::Approx(0.0110341894140625).epsilon(1e-13));
  // 0.125^2 / 0.875^2 = 1/49 = 0.02 / 0.98: an exact tie between the two
  CHECK(p01 == doctest::Approx(p20).epsilon(1e-13));
  CHECK(pattern_probability(Vector{1, 0, 0, 0, 1, 0, 0, 0}, spec) ==
        doctest::Approx(0.125 * std::pow(0.875, 3) * 0.02 * std::pow(0.98, 3)).epsilon(1e-13));
  CHECK(log_pattern_probability(Vector(8, 0), spec) == doctest::Approx(std::log(p0)));
  CHECK_THROWS_AS(pattern_probability(Vector(7, 0), spec), Error);
}

TEST_CASE("channel spec validation") {
  CHECK_THROWS_AS(ChannelSpec(2, {0.5, 0.1}, B12), Error);
  CHECK_THROWS_AS(ChannelSpec(2, {0.0, 0.1}, B12), Error);
  CHECK_THROWS_AS(ChannelSpec(2, {0.1}, B12), Error);
  CHECK_NOTHROW(ChannelSpec(3, {0.6, 0.1}, B12));
}

TEST_CASE("probabilities sum to one and match the product") {
  const BlockStructure bs({{5, 1}, {4, 3}, {3, 2}});
  const ChannelSpec spec(2, {0.2, 0.01, 0.07}, bs);
  double total = 0.0;
  oracle::for_each_vector(2, 12, [&](const Vector& e) {
    const double p = pattern_probability(e, spec);
    CHECK(p == doctest::Approx(prob_ref(e, 2, spec.rhos(), bs)).epsilon(1e-12));
    total += p;
  });
  CHECK(std::abs(total - 1.0) < 1e-12);

  const BlockStructure b3({{3, 1}, {2, 2}});
  const ChannelSpec s3(3, {0.3, 0.05}, b3);
  total = 0.0;
  oracle::for_each_vector(3, 5, [&](const Vector& e) { total += pattern_probability(e, s3); });
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("likelihood decreases with every extra error") {
  const BlockStructure bs({{3, 1}, {3, 2}});
  const ChannelSpec spec(3, {0.4, 0.1}, bs);
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; b <= 3; ++b) {
      const double p = spec.log_probability(TWeight{{a, b}});
      if (a < 3) CHECK(spec.log_probability(TWeight{{a + 1, b}}) < p);
      if (b < 3) CHECK(spec.log_probability(TWeight{{a, b + 1}}) < p);
    }
}

TEST_CASE("transmit") {
  const BlockStructure bs({{50000, 1}, {50000, 1}});
  const ChannelSpec spec(2, {0.001, 0.3}, bs);
  Rng rng(9);
  const Vector c(100000, 0);
  const Vector r = transmit(c, spec, rng);
  double flips[2] = {0, 0};
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i] <= 1);
    flips[i / 50000] += r[i];
  }
  const double p[2] = {0.001, 0.3};
  for (int l = 0; l < 2; ++l) {
    const double sigma = std::sqrt(p[l] * (1 - p[l]) / 50000);
    CHECK(std::abs(flips[l] / 50000 - p[l]) < 5 * sigma);
  }
  Rng a(5), b(5);
  CHECK(transmit(c, spec, a) == transmit(c, spec, b));

  // q = 5: a flipped symbol never stays put and the four targets are even
  const BlockStructure b5({{20000, 1}});
  const ChannelSpec s5(5, {0.5}, b5);
  Vector base(20000);
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = static_cast<Elem>(i % 5);
  const Vector r5 = transmit(base, s5, rng);
  std::size_t shift[5] = {0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < base.size(); ++i) ++shift[(r5[i] + 5 - base[i]) % 5];
  const double n = 20000, flipped = n - shift[0];
  CHECK(std::abs(flipped / n - 0.5) < 5 * std::sqrt(0.25 / n));
  for (int s = 1; s < 5; ++s) CHECK(std::abs(shift[s] / flipped - 0.25) < 5 * std::sqrt(0.1875 / flipped));
}

TEST_CASE("decoders on small cases") {
  const auto c1 = example1();
  const auto spec = two_channels();
  for (const auto& c : enumerate_codewords(c1)) {
    Vector r = c;
    r[2] ^= 1;
    CHECK(ml_decode(c1, r, spec) == std::vector<Vector>{c});
    CHECK(ml_decode(c1, c, spec) == std::vector<Vector>{c});
  }
  const BlockStructure b27({{4, 2}, {4, 7}});
  const auto c2 = LinearCode::from_generator(F2, b27, Matrix(4, 4).hstack(Matrix::identity(4)));
  const double w27[] = {2, 7};
  const Vector r{0, 0, 0, 0, 1, 1, 0, 0};
  CHECK(wh_decode(c2, r, w27) == std::vector<Vector>{r});

  // ties come back as sets: repetition code of length 2, one error
  const auto rep = LinearCode::from_generator(F2, BlockStructure::hamming(2), Matrix::from_rows({{1, 1}}));
  const double one[] = {1};
  CHECK(wh_decode(rep, Vector{1, 0}, one).size() == 2);
  CHECK(ml_decode(rep, Vector{1, 0}, ChannelSpec(2, {0.1}, BlockStructure::hamming(2))).size() == 2);
}

TEST_CASE("ML and real-weight decoding agree") {
  const auto spec = two_channels();
  const auto lam = optimal_scalings(spec.rhos(), 2).real_weights;
  const auto c1 = example1();
  const auto cc = ConstructedCode::build(F2, 7, 7, Family::Binary);
  const ChannelSpec spec14(2, {0.125, 0.02}, cc.code().blocks());
  for (const LinearCode* code : {&c1, &cc.code()}) {
    const ChannelSpec& s = code->n() == 8 ? spec : spec14;
    Rng rng(77);
    for (int t = 0; t < 2000; ++t) {
      Vector r(code->n());
      for (auto& x : r) x = static_cast<Elem>(rng.uniform_below(2));
      CHECK(as_set(ml_decode(*code, r, s)) == as_set(wh_decode(*code, r, lam)));
    }
  }
  // q = 3 with unequal channels
  const BlockStructure bs({{3, 1}, {3, 2}});
  const ChannelSpec s3(3, {0.3, 0.04}, bs);
  const auto l3 = optimal_scalings(s3.rhos(), 3).real_weights;
  const auto c3 = random_code(Field(3), bs, 3, 12).code;
  oracle::for_each_vector(3, 6, [&](const Vector& r) {
    CHECK(as_set(ml_decode(c3, r, s3)) == as_set(wh_decode(c3, r, l3)));
  });
}

TEST_CASE("coverage check") {
  const auto c1 = example1();
  const auto spec = two_channels();
  const auto ok = coverage_check(c1, spec, 0.011);
  CHECK(ok.holds);
  CHECK(ok.tau == 2);
  CHECK(!ok.witness);
  const auto bad = coverage_check(c1, spec, 0.001);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(wh_weight(*bad.witness, B12) >= 3);
  CHECK(pattern_probability(*bad.witness, spec) >= 0.001);
  CHECK(coverage_check(c1, spec, 1.0).holds);

  // exhaustive reference
  for (double th : {0.02, 0.011, 0.005, 0.001, 1e-4}) {
    bool holds = true;
    oracle::for_each_vector(2, 8, [&](const Vector& e) {
      if (prob_ref(e, 2, spec.rhos(), B12) >= th && oracle::weight(e, B12) > 2) holds = false;
    });
    CHECK(coverage_check(c1, spec, th).holds == holds);
  }
}

TEST_CASE("simulation bookkeeping") {
  const auto c1 = example1();
  const auto spec = two_channels();
  DecoderChoice dc{DecoderKind::WhInteger, {1, 2}};
  const auto zero = simulate(c1, spec, dc, 0, 1);
  CHECK(zero.trials == 0);
  CHECK(zero.word_errors == 0);
  CHECK(zero.decode_failures == 0);
  CHECK(zero.empirical_wer == 0.0);

  const auto a = simulate(c1, spec, dc, 3000, 8);
  const auto b = simulate(c1, spec, dc, 3000, 8);
  CHECK(a.word_errors == b.word_errors);
  CHECK(a.decode_failures == b.decode_failures);
  CHECK(a.per_block_symbol_error_rate == b.per_block_symbol_error_rate);
  CHECK(a.correct() + a.word_errors + a.decode_failures == a.trials);
  CHECK(a.seed == 8);

  // each trial depends on its index only
  const auto t7 = simulate_trial(c1, spec, dc, 8, 7);
  CHECK(simulate_trial(c1, spec, dc, 8, 7).received == t7.received);
  CHECK(simulate_trial(c1, spec, dc, 8, 6).received != t7.received);

  for (std::uint64_t i = 0; i < 3000; ++i) {
    const auto t = simulate_trial(c1, spec, dc, 8, i);
    CHECK(t.error_weight == wh_distance(t.sent, t.received, B12));
    if (t.error_weight <= 2) CHECK(t.correct());
  }
}

TEST_CASE("word error rate against the exact value") {
  const auto c1 = example1();
  const auto spec = two_channels();
  const auto words = oracle::codewords(c1.generator(), 2);
  // decoding is translation invariant: c + e is decoded right iff e is
  // decoded to the zero word alone
  double exact = 0.0;
  oracle::for_each_vector(2, 8, [&](const Vector& e) {
    std::uint64_t best = UINT64_MAX, count = 0;
    bool zero_best = false;
    for (const auto& c : words) {
      Vector diff(8);
      bool is_zero = true;
      for (int i = 0; i < 8; ++i) {
        diff[i] = c[i] ^ e[i];
        is_zero = is_zero && c[i] == 0;
      }
      const auto w = oracle::weight(diff, B12);
      if (w < best) {
        best = w;
        count = 1;
        zero_best = is_zero;
      } else if (w == best) {
        ++count;
        zero_best = zero_best || is_zero;
      }
    }
    if (!(zero_best && count == 1)) exact += prob_ref(e, 2, spec.rhos(), B12);
  });
  const std::uint64_t n = 100000;
  const auto st = simulate(c1, spec, DecoderChoice{DecoderKind::WhInteger, {1, 2}}, n, 1);
  const double sigma = std::sqrt(exact * (1 - exact) / n);
  CHECK(std::abs(st.empirical_wer - exact) < 3 * sigma);
  MESSAGE("exact WER " << exact << ", empirical " << st.empirical_wer);

  for (std::size_t l = 0; l < 2; ++l) {
    const double p = spec.rhos()[l];
    const double s = std::sqrt(p * (1 - p) / (n * 4.0));
    CHECK(std::abs(st.per_block_symbol_error_rate[l] - p) < 5 * s);
  }
}

TEST_CASE("gv experiment") {
  const auto fig = BlockStructure::parse("7:1,7:2");
  const auto one = gv_experiment(F2, fig, 1, 1, 20, 3);
  CHECK(one.success_fraction == 1.0);
  CHECK(one.distances.size() == 20);
  CHECK(gv_experiment(F2, fig, 3, 22, 20, 3).success_fraction == 0.0);
  const auto a = gv_experiment(F2, fig, 6, 5, 50, 11);
  CHECK(a.distances == gv_experiment(F2, fig, 6, 5, 50, 11).distances);
  for (std::size_t t = 0; t < 5; ++t) {
    const auto code = random_code(F2, fig, 6, Rng::substream(11, t).next_u64()).code;
    CHECK(min_wh_distance(code).distance == a.distances[t]);
  }
}
