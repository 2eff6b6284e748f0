#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "whm/block_metric.hpp"
#include "whm/linear_code.hpp"
#include "whm/rng.hpp"

namespace whm {

/// Independent q-ary symmetric channels, one per block.
class ChannelSpec {
 public:
  /// Throws InvalidCrossover unless every rho lies in (0, 1 - 1/q) and
  /// LengthMismatch unless there is one rho per block.
  ChannelSpec(std::uint32_t q, std::vector<double> rhos, BlockStructure bs);

  std::uint32_t q() const noexcept { return q_; }
  const std::vector<double>& rhos() const noexcept { return rhos_; }
  const BlockStructure& blocks() const noexcept { return bs_; }

  /// log P(e) for an error pattern of the given T-weight.
  double log_probability(const TWeight& t) const;

 private:
  std::uint32_t q_;
  std::vector<double> rhos_;
  BlockStructure bs_;
  std::vector<double> log_symbol_error_;  // log(rho / (q - 1))
  std::vector<double> log_symbol_ok_;     // log(1 - rho)
};

/// prod_l (rho_l / (q-1))^{w_l} (1 - rho_l)^{n_l - w_l}, w = T-weight of e.
double pattern_probability(std::span<const Elem> e, const ChannelSpec& spec);
double log_pattern_probability(std::span<const Elem> e, const ChannelSpec& spec);

/// Sends c through the channel: a symbol of block l is replaced, with
/// probability rho_l, by one of the q - 1 other symbols chosen uniformly.
Vector transmit(std::span<const Elem> c, const ChannelSpec& spec, Rng& rng);

/// Relative tolerance for declaring two log-likelihoods or real-weighted
/// distances equal.
inline constexpr double kTieTolerance = 1e-12;

/// All codewords maximizing P(r | c), in codebook order.
std::vector<Vector> ml_decode(const LinearCode& code, std::span<const Elem> received,
                              const ChannelSpec& spec, const Budgets& budgets = {});

/// All codewords minimizing sum_l weights_l * d_H(r_l, c_l), in codebook order.
std::vector<Vector> wh_decode(const LinearCode& code, std::span<const Elem> received,
                              std::span<const double> weights, const Budgets& budgets = {});

struct CoverageResult {
  bool holds = true;
  /// An error pattern at least as likely as the threshold but heavier than tau.
  std::optional<Vector> witness;
  std::uint64_t tau = 0;
};

/// Whether every error pattern e with P(e) >= threshold has weight <= tau(C).
/// Patterns are grouped by T-weight (P and the weight depend only on it); the
/// witness puts its errors (value 1) on the first positions of each block.
CoverageResult coverage_check(const LinearCode& code, const ChannelSpec& spec, double threshold,
                              const Budgets& budgets = {});

enum class DecoderKind { Ml, WhReal, WhInteger };

struct DecoderChoice {
  DecoderKind kind = DecoderKind::Ml;
  /// Used by WhInteger; WhReal derives lambda' from the channel.
  std::vector<std::uint32_t> integer_weights;
};

struct TrialOutcome {
  Vector sent;
  Vector received;
  std::vector<Vector> decoded;
  /// Weighted weight of received - sent under the code's block structure.
  std::uint64_t error_weight = 0;
  bool correct() const { return decoded.size() == 1 && decoded.front() == sent; }
};

/// Trial `index`: uniform message from Rng::substream(seed, index), encode,
/// transmit, decode.
TrialOutcome simulate_trial(const LinearCode& code, const ChannelSpec& spec,
                            const DecoderChoice& decoder, std::uint64_t seed, std::uint64_t index,
                            const Budgets& budgets = {});

struct SimulationStats {
  std::uint64_t trials = 0;
  /// Decoder returned a single, wrong codeword.
  std::uint64_t word_errors = 0;
  /// Decoder returned a tie set of size > 1 (counted as an error in the WER).
  std::uint64_t decode_failures = 0;
  /// (word_errors + decode_failures) / trials.
  double empirical_wer = 0.0;
  std::vector<double> per_block_symbol_error_rate;
  std::uint64_t seed = 0;

  std::uint64_t correct() const { return trials - word_errors - decode_failures; }
};

SimulationStats simulate(const LinearCode& code, const ChannelSpec& spec, const DecoderChoice& decoder,
                         std::uint64_t trials, std::uint64_t seed, const Budgets& budgets = {});

struct GvExperiment {
  double success_fraction = 0.0;
  std::vector<std::uint64_t> distances;
};

/// Draws `trials` random [n, k] codes and records each minimum distance. Code t
/// is random_code(..., Rng::substream(seed, t).next_u64()).
GvExperiment gv_experiment(const Field& field, const BlockStructure& bs, std::size_t k,
                           std::uint64_t d_target, std::uint64_t trials, std::uint64_t seed,
                           const Budgets& budgets = {});

}  // namespace whm
