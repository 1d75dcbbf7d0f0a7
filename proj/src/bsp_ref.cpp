#include "dsplan/bsp_ref.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "dsplan/errors.hpp"

namespace dsplan {

namespace {

double posterior_cost_at(int m, double y, const AcceptanceCost& g, const GammaPrior& prior) {
  const double shape = m + prior.shape;
  const double lg = specfun::log_gamma(shape);
  specfun::CompensatedSum s;
  for (const auto& t : g.terms()) {
    if (t.exponent == 0.0) {
      s += t.coefficient;
    } else {
      s += t.coefficient * std::exp(specfun::log_gamma(shape + t.exponent) - lg - t.exponent * std::log(y));
    }
  }
  return s.value();
}

}  // namespace

double posterior_expected_cost(int m, double z, const AcceptanceCost& g, const GammaPrior& prior) {
  prior.validate();
  if (m < 0 || !(z >= 0.0)) throw DomainError("posterior_expected_cost: need m >= 0, z >= 0");
  return posterior_cost_at(m, z + prior.rate, g, prior);
}

BayesDecisionThreshold bsp_threshold(int m, int n, double tau, const CostModel& costs,
                                     const AcceptanceCost& g, const GammaPrior& prior) {
  prior.validate();
  if (m < 0 || n < 0 || m > n || !(tau >= 0.0)) throw DomainError("bsp_threshold: need 0 <= m <= n, tau >= 0");
  BayesDecisionThreshold out;
  out.m = m;
  const double cr = costs.c_reject;
  if (cr <= g.constant()) {
    out.root = std::numeric_limits<double>::infinity();
    out.cutoff = std::numeric_limits<double>::infinity();
    return out;
  }
  // Cost of accepting decreases in y = z + b from +inf (or a_0) down to a_0 < Cr.
  auto excess = [&](double y) { return posterior_cost_at(m, y, g, prior) - cr; };
  double lo = std::numeric_limits<double>::min();
  double hi = std::max(1.0, prior.rate);
  if (excess(lo) <= 0.0) {
    out.root = 0.0;
  } else {
    while (excess(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
    }
    while (hi - lo > 1e-10 * std::max(1.0, hi)) {
      const double mid = 0.5 * (lo + hi);
      if (excess(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.root = hi;
  }
  out.cutoff = std::max(0.0, out.root - prior.rate);
  if (m >= 1) out.cutoff = std::min(out.cutoff, n * tau);
  return out;
}

Decision bsp_decide(const BayesDecisionThreshold& t, double z) {
  return z >= t.cutoff ? Decision::accept : Decision::reject;
}

MCEstimate bsp_bayes_risk_mc(const Scheme& scheme, const CostModel& costs, const AcceptanceCost& g,
                             const GammaPrior& prior, const MCConfig& mc) {
  costs.validate();
  prior.validate();
  const auto [n, tau] = std::visit([](const auto& s) { return std::pair<int, double>{s.n, s.tau}; }, scheme);
  std::vector<BayesDecisionThreshold> table;
  for (int m = 0; m <= n; ++m) table.push_back(bsp_threshold(m, n, tau, costs, g, prior));
  return run_trials(mc, TrialFn<1>([&](CounterStream& stream) {
           const double lambda = draw_rate(prior, stream);
           const LifeTestOutcome out = draw_life_test(lambda, scheme, stream);
           const Decision d = bsp_decide(table[out.m], total_time_on_test(out));
           return std::array<double, 1>{loss_of(out, d, lambda, costs, g)};
         }))[0];
}

}  // namespace dsplan
