#pragma once

#include <cstdint>
#include <array>
#include <functional>
#include <utility>

#include "dsplan/model.hpp"
#include "dsplan/rng.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan {

struct MCConfig {
  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 20240917;
  /// Trials per reduction block.
  std::int64_t batch = 65'536;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  int workers = 1;

  void validate() const;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
};

template <std::size_t K>
using TrialFn = std::function<std::array<double, K>(CounterStream&)>;

/// Runs `trials` independent draws of fn(stream) and returns the mean and its
/// standard error for every output. Trial i always uses CounterStream(seed, i)
/// and blocks are reduced in trial order, so the result does not depend on the
/// worker count.
std::array<MCEstimate, 1> run_trials(const MCConfig& mc, const TrialFn<1>& fn);
std::array<MCEstimate, 2> run_trials(const MCConfig& mc, const TrialFn<2>& fn);

/// Draws lambda from the prior.
double draw_rate(const GammaPrior& prior, CounterStream& stream);

MCEstimate simulate_dsp_risk(const Plan& plan, const CostModel& costs, const AcceptanceCost& g,
                             const GammaPrior& prior, const MCConfig& mc);

/// Empirical P(lambda_hat >= zeta | lambda).
MCEstimate simulate_tail_probability(double lambda, const Plan& plan, const MCConfig& mc);

/// Empirical (E(M), E(tau*)).
std::pair<MCEstimate, MCEstimate> simulate_moments(const Scheme& scheme, const GammaPrior& prior,
                                                   const MCConfig& mc);

/// Rate estimate for either scheme.
double lambda_hat(const LifeTestOutcome& outcome, const Scheme& scheme);

}  // namespace dsplan
