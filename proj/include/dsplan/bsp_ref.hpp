#pragma once

#include "dsplan/mc_oracle.hpp"
#include "dsplan/model.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan {

/// Bayes decision at m failures: accept iff the total time on test z is at
/// least `cutoff`. cutoff = +inf means the batch is always rejected.
struct BayesDecisionThreshold {
  int m = 0;
  double root = 0.0;  // y = z + b solving posterior_expected_cost = Cr
  double cutoff = 0.0;
};

/// E[g(lambda) | m failures, total time z] under the Gamma(a + m, b + z) posterior.
double posterior_expected_cost(int m, double z, const AcceptanceCost& g, const GammaPrior& prior);

BayesDecisionThreshold bsp_threshold(int m, int n, double tau, const CostModel& costs,
                                     const AcceptanceCost& g, const GammaPrior& prior);

Decision bsp_decide(const BayesDecisionThreshold& t, double z);

/// Simulated Bayes risk of the Bayes decision rule on a given life-test scheme.
MCEstimate bsp_bayes_risk_mc(const Scheme& scheme, const CostModel& costs, const AcceptanceCost& g,
                             const GammaPrior& prior, const MCConfig& mc);

}  // namespace dsplan
