#include "whm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "whm/ball.hpp"
#include "whm/error.hpp"
#include "whm/kernels.hpp"

namespace whm {

ChannelSpec::ChannelSpec(std::uint32_t q, std::vector<double> rhos, BlockStructure bs)
    : q_(q), rhos_(std::move(rhos)), bs_(std::move(bs)) {
  if (rhos_.size() != bs_.m()) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(rhos_.size()) +
                                               " crossover probabilities for " +
                                               std::to_string(bs_.m()) + " blocks");
  }
  for (double rho : rhos_) {
    check_crossover(rho, q_);
    log_symbol_error_.push_back(std::log(rho / double(q_ - 1)));
    log_symbol_ok_.push_back(std::log1p(-rho));
  }
}

double ChannelSpec::log_probability(const TWeight& t) const {
  double lp = 0.0;
  for (std::size_t l = 0; l < bs_.m(); ++l) {
    lp += t[l] * log_symbol_error_[l] + double(bs_.block(l).length - t[l]) * log_symbol_ok_[l];
  }
  return lp;
}

double log_pattern_probability(std::span<const Elem> e, const ChannelSpec& spec) {
  return spec.log_probability(t_weight(e, spec.blocks()));
}

double pattern_probability(std::span<const Elem> e, const ChannelSpec& spec) {
  return std::exp(log_pattern_probability(e, spec));
}

Vector transmit(std::span<const Elem> c, const ChannelSpec& spec, Rng& rng) {
  const BlockStructure& bs = spec.blocks();
  if (c.size() != bs.n()) {
    throw Error(ErrorKind::LengthMismatch, "codeword length " + std::to_string(c.size()) +
                                               " != n = " + std::to_string(bs.n()));
  }
  const std::uint32_t q = spec.q();
  Vector out(c.begin(), c.end());
  for (std::size_t l = 0; l < bs.m(); ++l) {
    const double rho = spec.rhos()[l];
    for (std::size_t i = bs.offset(l); i < bs.offset(l) + bs.block(l).length; ++i) {
      if (rng.uniform01() < rho) {
        const std::uint64_t shift = 1 + rng.uniform_below(q - 1);
        out[i] = static_cast<Elem>((out[i] + shift) % q);
      }
    }
  }
  return out;
}

namespace {

bool tied(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

// Scores every codeword by a per-block linear function of d_H(r_l, c_l) and
// keeps the extremal set.
template <class Score>
std::vector<Vector> extremal_set(const LinearCode& code, std::span<const Elem> received,
                                 const Budgets& budgets, bool maximize, Score&& score) {
  const BlockStructure& bs = code.blocks();
  if (received.size() != bs.n()) {
    throw Error(ErrorKind::LengthMismatch, "received length " + std::to_string(received.size()) +
                                               " != n = " + std::to_string(bs.n()));
  }
  const BlockCounter counter(bs);
  std::vector<std::uint64_t> mask(counter.words());
  std::vector<std::uint32_t> counts(bs.m());
  std::vector<double> scores;
  CodewordWalker walker(code, budgets);
  scores.reserve(walker.size());
  do {
    kernels::mismatch_mask(received, walker.codeword(), mask);
    counter.counts(mask, counts);
    scores.push_back(score(counts));
  } while (walker.advance());

  const double best = maximize ? *std::max_element(scores.begin(), scores.end())
                               : *std::min_element(scores.begin(), scores.end());
  std::vector<Vector> out;
  CodewordWalker again(code, budgets);
  std::size_t idx = 0;
  do {
    if (tied(scores[idx], best)) out.push_back(again.codeword());
    ++idx;
  } while (again.advance());
  return out;
}

}  // namespace

std::vector<Vector> ml_decode(const LinearCode& code, std::span<const Elem> received,
                              const ChannelSpec& spec, const Budgets& budgets) {
  if (!(spec.blocks() == code.blocks())) {
    throw Error(ErrorKind::LengthMismatch, "channel and code block structures differ");
  }
  return extremal_set(code, received, budgets, true, [&](std::span<const std::uint32_t> w) {
    return spec.log_probability(TWeight{{w.begin(), w.end()}});
  });
}

std::vector<Vector> wh_decode(const LinearCode& code, std::span<const Elem> received,
                              std::span<const double> weights, const Budgets& budgets) {
  if (weights.size() != code.blocks().m()) {
    throw Error(ErrorKind::LengthMismatch, "one decoder weight per block required");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorKind::InvalidParameter, "decoder weights must be positive");
  }
  return extremal_set(code, received, budgets, false, [&](std::span<const std::uint32_t> w) {
    double s = 0.0;
    for (std::size_t l = 0; l < w.size(); ++l) s += weights[l] * w[l];
    return s;
  });
}

CoverageResult coverage_check(const LinearCode& code, const ChannelSpec& spec, double threshold,
                              const Budgets& budgets) {
  const BlockStructure& bs = code.blocks();
  if (!(spec.blocks() == bs)) {
    throw Error(ErrorKind::LengthMismatch, "channel and code block structures differ");
  }
  CoverageResult res;
  res.tau = tau(code, budgets);
  std::optional<TWeight> worst;
  double worst_lp = -INFINITY;
  for (const TWeight& t : all_t_weights(bs)) {
    const double lp = spec.log_probability(t);
    if (std::exp(lp) < threshold || t.weighted(bs) <= res.tau) continue;
    if (!worst || lp > worst_lp) {
      worst = t;
      worst_lp = lp;
    }
  }
  if (worst) {
    res.holds = false;
    Vector e(bs.n(), 0);
    for (std::size_t l = 0; l < bs.m(); ++l)
      std::fill_n(e.begin() + bs.offset(l), (*worst)[l], Elem{1});
    res.witness = std::move(e);
  }
  return res;
}

namespace {

std::vector<double> decoder_weights(const ChannelSpec& spec, const DecoderChoice& decoder) {
  if (decoder.kind == DecoderKind::WhReal) {
    return optimal_scalings(spec.rhos(), spec.q()).real_weights;
  }
  if (decoder.integer_weights.size() != spec.blocks().m()) {
    throw Error(ErrorKind::InvalidParameter, "integer decoder needs one weight per block");
  }
  return {decoder.integer_weights.begin(), decoder.integer_weights.end()};
}

TrialOutcome run_trial(const LinearCode& code, const ChannelSpec& spec, const DecoderChoice& decoder,
                       std::span<const double> weights, std::uint64_t seed, std::uint64_t index,
                       const Budgets& budgets) {
  Rng rng = Rng::substream(seed, index);
  Vector message(code.k());
  for (Elem& s : message) s = static_cast<Elem>(rng.uniform_below(code.field().q()));
  TrialOutcome out;
  out.sent = code.encode(message);
  out.received = transmit(out.sent, spec, rng);
  out.error_weight = wh_distance(out.received, out.sent, code.blocks());
  out.decoded = decoder.kind == DecoderKind::Ml ? ml_decode(code, out.received, spec, budgets)
                                                : wh_decode(code, out.received, weights, budgets);
  return out;
}

}  // namespace

TrialOutcome simulate_trial(const LinearCode& code, const ChannelSpec& spec,
                            const DecoderChoice& decoder, std::uint64_t seed, std::uint64_t index,
                            const Budgets& budgets) {
  std::vector<double> weights;
  if (decoder.kind != DecoderKind::Ml) weights = decoder_weights(spec, decoder);
  return run_trial(code, spec, decoder, weights, seed, index, budgets);
}

SimulationStats simulate(const LinearCode& code, const ChannelSpec& spec, const DecoderChoice& decoder,
                         std::uint64_t trials, std::uint64_t seed, const Budgets& budgets) {
  const BlockStructure& bs = code.blocks();
  if (!(spec.blocks() == bs)) {
    throw Error(ErrorKind::LengthMismatch, "channel and code block structures differ");
  }
  SimulationStats stats;
  stats.trials = trials;
  stats.seed = seed;
  stats.per_block_symbol_error_rate.assign(bs.m(), 0.0);
  if (trials == 0) return stats;
  if (!checked_power(code.field().q(), code.k(), budgets.codewords)) {
    throw Error(ErrorKind::BudgetExceeded, "codebook too large to decode exhaustively");
  }

  std::vector<double> weights;
  if (decoder.kind != DecoderKind::Ml) weights = decoder_weights(spec, decoder);
  std::vector<std::uint64_t> flips(bs.m(), 0);
  Vector diff(bs.n());
  for (std::uint64_t t = 0; t < trials; ++t) {
    const TrialOutcome o = run_trial(code, spec, decoder, weights, seed, t, budgets);
    kernels::sub_mod(diff, o.received, o.sent, static_cast<Elem>(code.field().q()));
    const TWeight tw = t_weight(diff, bs);
    for (std::size_t l = 0; l < bs.m(); ++l) flips[l] += tw[l];
    if (o.correct()) continue;
    if (o.decoded.size() > 1) ++stats.decode_failures;
    else ++stats.word_errors;
  }
  stats.empirical_wer = double(stats.word_errors + stats.decode_failures) / double(trials);
  for (std::size_t l = 0; l < bs.m(); ++l) {
    stats.per_block_symbol_error_rate[l] = double(flips[l]) / (double(trials) * bs.block(l).length);
  }
  return stats;
}

GvExperiment gv_experiment(const Field& field, const BlockStructure& bs, std::size_t k,
                           std::uint64_t d_target, std::uint64_t trials, std::uint64_t seed,
                           const Budgets& budgets) {
  GvExperiment out;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RandomCode rc = random_code(field, bs, k, Rng::substream(seed, t).next_u64());
    const std::uint64_t d = min_wh_distance(rc.code, DistanceMethod::Auto, budgets).distance;
    out.distances.push_back(d);
    if (d >= d_target) ++hits;
  }
  out.success_fraction = trials == 0 ? 0.0 : double(hits) / double(trials);
  return out;
}

}  // namespace whm
