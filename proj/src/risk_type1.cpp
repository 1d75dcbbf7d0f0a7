#include "dsplan/risk_type1.hpp"

#include <cmath>

#include "alternating.hpp"
#include "dsplan/errors.hpp"

namespace dsplan {

std::vector<double> threshold_weights(const CostModel& costs, const AcceptanceCost& g) {
  std::vector<double> w;
  w.reserve(g.size());
  for (const auto& t : g.terms()) w.push_back(-t.coefficient);
  w.front() += costs.c_reject;
  return w;
}

double expected_failures_type1(int n, double tau, const GammaPrior& prior) {
  prior.validate();
  if (n < 0 || !(tau >= 0.0)) throw DomainError("expected_failures_type1: need n >= 0, tau >= 0");
  if (n == 0 || tau == 0.0) return 0.0;
  check_stability_cap(n);
  specfun::CompensatedSum sum;
  const std::vector<double> pmf = detail::prior_binomial_pmfs(n, tau, prior.shape, prior.rate);
  for (int m = 1; m <= n; ++m) sum += m * pmf[m];
  return sum.value();
}

double tail_probability_type1(int n, double tau, double zeta, double lambda) {
  if (n < 1 || !(tau > 0.0) || !(lambda > 0.0)) {
    throw DomainError("tail_probability_type1: need n >= 1, tau > 0, lambda > 0");
  }
  if (zeta < 0.0 || std::isnan(zeta)) throw DomainError("tail_probability_type1: zeta must be >= 0");
  if (zeta == 0.0) return 1.0;
  check_stability_cap(n);
  const double zeta_eff = effective_threshold(n, tau, zeta);
  if (std::isinf(zeta_eff)) return 0.0;
  const double inv = 1.0 / zeta_eff;
  // Given M = m, lambda_hat >= zeta iff Y = 1/lambda_hat <= 1/zeta_eff, and Y - shift is
  // Gamma(m, m lambda) per mixture member.
  specfun::CompensatedSum sum;
  for (int m = 1; m <= n; ++m) {
    for (int j = 0; j <= m; ++j) {
      const double shift = (n - m + j) * tau / m;
      if (!(inv > shift)) continue;
      const double w = std::exp(specfun::log_binomial(n, m) + specfun::log_binomial(m, j) -
                                lambda * (n - m + j) * tau);
      const double p = specfun::reg_gamma_p(m, m * lambda * (inv - shift));
      sum += j % 2 == 0 ? w * p : -w * p;
    }
  }
  const double v = sum.value();
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

Type1RiskEvaluator::Type1RiskEvaluator(int n, double tau, const CostModel& costs,
                                       const AcceptanceCost& g, const GammaPrior& prior)
    : n_(n),
      tau_(tau),
      c_reject_(costs.c_reject),
      weights_(threshold_weights(costs, g)),
      kernel_(n, tau, type1_terms(n, tau), g, prior),
      scratch_(g.size()) {
  costs.validate();
  prior.validate();
  base_.sampling_term = n * (costs.c_sample - costs.salvage);
  base_.salvage_term = expected_failures_type1(n, tau, prior) * costs.salvage;
  base_.time_term = tau * costs.c_time;
  base_.acceptance_term = g.expectation(prior);
  base_.per_l_weights = weights_;
  fixed_ = base_.sampling_term + base_.salvage_term + base_.time_term;
}

RiskBreakdown Type1RiskEvaluator::breakdown(double zeta) const {
  RiskBreakdown out = base_;
  if (n_ == 0) {
    // No data: zeta = 0 rejects outright, anything else accepts.
    out.threshold_term = zeta == 0.0 ? c_reject_ - out.acceptance_term : 0.0;
  } else {
    kernel_.evaluate(zeta, scratch_);
    specfun::CompensatedSum t;
    for (std::size_t l = 0; l < weights_.size(); ++l) t += weights_[l] * scratch_[l];
    out.threshold_term = t.value();
  }
  out.total = out.sampling_term + out.salvage_term + out.time_term + out.acceptance_term +
              out.threshold_term;
  return out;
}

double Type1RiskEvaluator::risk(double zeta) const {
  if (n_ == 0) return breakdown(zeta).total;
  kernel_.evaluate(zeta, scratch_);
  double t = 0.0;
  for (std::size_t l = 0; l < weights_.size(); ++l) t += weights_[l] * scratch_[l];
  return fixed_ + base_.acceptance_term + t;
}

double Type1RiskEvaluator::risk(const ZetaGridPowers& powers, std::size_t k) const {
  if (n_ == 0) return breakdown(powers.zeta(k)).total;
  kernel_.evaluate(powers, k, scratch_);
  double t = 0.0;
  for (std::size_t l = 0; l < weights_.size(); ++l) t += weights_[l] * scratch_[l];
  return fixed_ + base_.acceptance_term + t;
}

RiskBreakdown bayes_risk_type1(const Type1Plan& plan, const CostModel& costs,
                               const AcceptanceCost& g, const GammaPrior& prior) {
  plan.validate();
  check_stability_cap(plan.n);
  return Type1RiskEvaluator(plan.n, plan.tau, costs, g, prior).breakdown(plan.zeta);
}

}  // namespace dsplan
