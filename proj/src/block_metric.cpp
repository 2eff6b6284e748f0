#include "whm/block_metric.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>

#include "whm/error.hpp"
#include "whm/kernels.hpp"

namespace whm {

BlockStructure::BlockStructure(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::InvalidBlockStructure, "at least one block required");
  offsets_.reserve(blocks_.size());
  for (const Block& b : blocks_) {
    if (b.length == 0) throw Error(ErrorKind::InvalidBlockStructure, "block length must be >= 1");
    if (b.scaling == 0) {
      throw Error(ErrorKind::InvalidBlockStructure, "scaling factor must be >= 1");
    }
    offsets_.push_back(n_);
    n_ += b.length;
    max_weight_ += std::uint64_t{b.length} * b.scaling;
  }
}

namespace {

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::MalformedInput, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

BlockStructure BlockStructure::parse(std::string_view text) {
  std::vector<Block> blocks;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::MalformedInput, "block '" + std::string(item) + "' lacks ':'");
    }
    blocks.push_back({parse_uint(item.substr(0, colon), "block length"),
                      parse_uint(item.substr(colon + 1), "scaling factor")});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorKind::MalformedInput, "trailing ',' in block list");
  }
  return BlockStructure(std::move(blocks));
}

std::uint32_t BlockStructure::max_scaling() const noexcept {
  std::uint32_t best = 0;
  for (const Block& b : blocks_) best = std::max(best, b.scaling);
  return best;
}

std::vector<std::uint32_t> BlockStructure::scalings() const {
  std::vector<std::uint32_t> out;
  for (const Block& b : blocks_) out.push_back(b.scaling);
  return out;
}

BlockStructure BlockStructure::sorted_by_scaling() const {
  std::vector<Block> sorted = blocks_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Block& a, const Block& b) { return a.scaling < b.scaling; });
  return BlockStructure(std::move(sorted));
}

std::string BlockStructure::to_string() const {
  std::string out;
  for (const Block& b : blocks_) {
    if (!out.empty()) out += ',';
    out += std::to_string(b.length) + ':' + std::to_string(b.scaling);
  }
  return out;
}

bool TWeight::is_zero() const noexcept {
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t TWeight::weighted(const BlockStructure& bs) const {
  std::uint64_t s = 0;
  for (std::size_t l = 0; l < w.size(); ++l) s += std::uint64_t{w[l]} * bs.block(l).scaling;
  return s;
}

std::string TWeight::to_string() const {
  std::string out = "(";
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (l) out += ',';
    out += std::to_string(w[l]);
  }
  return out + ")";
}

BlockCounter::BlockCounter(const BlockStructure& bs) : words_(kernels::mask_words(bs.n())) {
  for (std::size_t l = 0; l < bs.m(); ++l) {
    scaling_.push_back(bs.block(l).scaling);
    std::size_t begin = bs.offset(l);
    const std::size_t end = begin + bs.block(l).length;
    while (begin < end) {
      const std::size_t word = begin / 64;
      const std::size_t stop = std::min(end, (word + 1) * 64);
      const std::size_t width = stop - begin;
      std::uint64_t bits = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
      parts_.push_back({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(word),
                        bits << (begin % 64)});
      begin = stop;
    }
  }
}

void BlockCounter::counts(std::span<const std::uint64_t> mask,
                          std::span<std::uint32_t> out) const noexcept {
  std::fill(out.begin(), out.end(), 0);
  for (const Part& p : parts_) out[p.block] += std::popcount(mask[p.word] & p.bits);
}

std::uint64_t BlockCounter::weight(std::span<const std::uint64_t> mask) const noexcept {
  std::uint64_t w = 0;
  for (const Part& p : parts_) {
    w += std::uint64_t(std::popcount(mask[p.word] & p.bits)) * scaling_[p.block];
  }
  return w;
}

namespace {

void check_length(std::size_t got, const BlockStructure& bs) {
  if (got != bs.n()) {
    throw Error(ErrorKind::LengthMismatch,
                "vector length " + std::to_string(got) + " != n = " + std::to_string(bs.n()));
  }
}

}  // namespace

TWeight t_weight(std::span<const Elem> v, const BlockStructure& bs) {
  check_length(v.size(), bs);
  TWeight t{std::vector<std::uint32_t>(bs.m(), 0)};
  for (std::size_t l = 0; l < bs.m(); ++l) {
    auto block = v.subspan(bs.offset(l), bs.block(l).length);
    t.w[l] = static_cast<std::uint32_t>(std::count_if(block.begin(), block.end(),
                                                      [](Elem e) { return e != 0; }));
  }
  return t;
}

std::uint64_t wh_weight(std::span<const Elem> v, const BlockStructure& bs) {
  return t_weight(v, bs).weighted(bs);
}

std::uint64_t wh_distance(std::span<const Elem> x, std::span<const Elem> y,
                          const BlockStructure& bs) {
  check_length(x.size(), bs);
  check_length(y.size(), bs);
  std::uint64_t d = 0;
  for (std::size_t l = 0; l < bs.m(); ++l) {
    const std::size_t off = bs.offset(l);
    std::uint64_t diff = 0;
    for (std::size_t i = off; i < off + bs.block(l).length; ++i) diff += x[i] != y[i];
    d += diff * bs.block(l).scaling;
  }
  return d;
}

void check_crossover(double rho, std::uint32_t q) {
  const double upper = 1.0 - 1.0 / static_cast<double>(q);
  if (!(rho > 0.0 && rho < upper)) {
    throw Error(ErrorKind::InvalidCrossover, "crossover probability " + std::to_string(rho) +
                                                 " outside (0, " + std::to_string(upper) + ")");
  }
}

namespace {

// Smallest achievable max relative deviation for a fixed integer tuple: with
// ratios r_l = lambda_l / lambda'_l the best 1/alpha is 2 / (r_min + r_max).
double fit_error(std::span<const std::uint32_t> ints, std::span<const double> reals) {
  double rmin = INFINITY, rmax = 0.0;
  for (std::size_t l = 0; l < ints.size(); ++l) {
    const double r = ints[l] / reals[l];
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  return (rmax - rmin) / (rmax + rmin);
}

struct Best {
  std::vector<std::uint32_t> tuple;
  double error = INFINITY;
  std::uint32_t max_entry = 0;

  void offer(const std::vector<std::uint32_t>& t, std::span<const double> reals) {
    constexpr double kTol = 1e-12;
    const double e = fit_error(t, reals);
    const std::uint32_t mx = *std::max_element(t.begin(), t.end());
    if (e < error - kTol || (std::abs(e - error) <= kTol && (mx < max_entry ||
                                                             (mx == max_entry && t < tuple)))) {
      tuple = t;
      error = e;
      max_entry = mx;
    }
  }
};

}  // namespace

ScalingFit optimal_scalings(std::span<const double> rhos, std::uint32_t q, std::uint32_t cap) {
  if (rhos.empty()) throw Error(ErrorKind::InvalidParameter, "no crossover probabilities");
  if (cap == 0) throw Error(ErrorKind::InvalidParameter, "cap must be >= 1");
  ScalingFit fit;
  for (double rho : rhos) {
    check_crossover(rho, q);
    fit.real_weights.push_back(std::log((1.0 - rho) / rho) + std::log(double(q - 1)));
  }
  const std::size_t m = rhos.size();
  const std::span<const double> reals = fit.real_weights;
  Best best;

  // Exhaustive over [1, cap]^m when small enough; otherwise, for every value of
  // the entry belonging to the largest weight, try floor/ceil neighbours of the
  // proportional value for the other entries.
  const double space = std::pow(double(cap), double(m));
  if (space <= double(1u << 22)) {
    std::vector<std::uint32_t> t(m, 1);
    while (true) {
      best.offer(t, reals);
      std::size_t i = 0;
      while (i < m && t[i] == cap) t[i++] = 1;
      if (i == m) break;
      ++t[i];
    }
  } else {
    const std::size_t top = std::max_element(reals.begin(), reals.end()) - reals.begin();
    const bool both = m <= 12;
    for (std::uint32_t s = 1; s <= cap; ++s) {
      std::vector<std::uint32_t> lo(m), hi(m);
      for (std::size_t l = 0; l < m; ++l) {
        const double ideal = s * reals[l] / reals[top];
        lo[l] = std::clamp<std::uint32_t>(static_cast<std::uint32_t>(std::floor(ideal)), 1, cap);
        hi[l] = std::clamp<std::uint32_t>(static_cast<std::uint32_t>(std::ceil(ideal)), 1, cap);
        if (!both) lo[l] = hi[l] = std::clamp<std::uint32_t>(
                       static_cast<std::uint32_t>(std::lround(ideal)), 1, cap);
      }
      const std::uint64_t combos = both ? (std::uint64_t{1} << m) : 1;
      for (std::uint64_t c = 0; c < combos; ++c) {
        std::vector<std::uint32_t> t(m);
        for (std::size_t l = 0; l < m; ++l) t[l] = ((c >> l) & 1u) ? hi[l] : lo[l];
        best.offer(t, reals);
      }
    }
  }

  std::uint32_t g = 0;
  for (std::uint32_t v : best.tuple) g = std::gcd(g, v);
  for (std::uint32_t& v : best.tuple) v /= g;
  fit.integer_weights = best.tuple;
  fit.scale_error = fit_error(fit.integer_weights, reals);
  return fit;
}

}  // namespace whm
