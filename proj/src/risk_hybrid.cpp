#include "dsplan/risk_hybrid.hpp"

#include <cmath>

#include "alternating.hpp"
#include "dsplan/errors.hpp"

namespace dsplan {

namespace {

void check_hybrid_args(const char* who, int n, int r, double tau) {
  if (n < 1 || r < 1 || r > n || !(tau >= 0.0) || std::isinf(tau)) {
    throw DomainError(std::string(who) + ": need 1 <= r <= n and finite tau >= 0");
  }
  check_stability_cap(n);
}

}  // namespace

double term_R(double p, int j, int m, int n, double tau, double zeta, const GammaPrior& prior) {
  prior.validate();
  if (m < 1) throw DomainError("term_R: m must be >= 1");
  const double shift = (n - m + j) * tau / m;
  if (shift < 0.0) throw DomainError("term_R: negative shift");
  const double zeta_eff = effective_threshold(n, tau, zeta);
  const MixtureTerm t = make_mixture_term(m, j, shift, 1.0, zeta_eff, prior);
  if (t.Sstar_jm <= 0.0) return 0.0;
  const double beta = prior.shape + p;
  return std::exp(specfun::log_gamma(beta) - beta * std::log(t.C_jm)) *
         specfun::reg_inc_beta(t.Sstar_jm, m, beta);
}

double failure_count_pmf(int n, int k, double tau, const GammaPrior& prior) {
  prior.validate();
  if (k < 0 || k > n) return 0.0;
  if (tau == 0.0) return k == 0 ? 1.0 : 0.0;
  return detail::prior_binomial_pmfs(n, tau, prior.shape, prior.rate)[k];
}

double expected_failures_hybrid(int n, int r, double tau, const GammaPrior& prior) {
  check_hybrid_args("expected_failures_hybrid", n, r, tau);
  if (tau == 0.0) return 0.0;
  prior.validate();
  const std::vector<double> pmf = detail::prior_binomial_pmfs(n, tau, prior.shape, prior.rate);
  specfun::CompensatedSum sum;
  for (int m = 1; m <= r - 1; ++m) sum += m * pmf[m];
  for (int k = r; k <= n; ++k) sum += r * pmf[k];
  return sum.value();
}

double expected_duration_hybrid(int n, int r, double tau, const GammaPrior& prior) {
  check_hybrid_args("expected_duration_hybrid", n, r, tau);
  prior.validate();
  if (tau == 0.0) return 0.0;
  // E[X_(r) 1{X_(r) <= tau}] + tau P(X_(r) > tau).
  const double part = detail::order_statistic_part(n, r, tau, prior.shape, prior.rate);
  double below = 0.0;
  const std::vector<double> pmf = detail::prior_binomial_pmfs(n, tau, prior.shape, prior.rate);
  for (int m = 0; m <= r - 1; ++m) below += pmf[m];
  const double v = part + tau * below;
  return v < 0.0 ? 0.0 : (v > tau ? tau : v);
}

double tail_probability_hybrid(int n, int r, double tau, double zeta, double lambda) {
  check_hybrid_args("tail_probability_hybrid", n, r, tau);
  if (!(tau > 0.0) || !(lambda > 0.0)) {
    throw DomainError("tail_probability_hybrid: need tau > 0, lambda > 0");
  }
  if (zeta < 0.0 || std::isnan(zeta)) throw DomainError("tail_probability_hybrid: zeta must be >= 0");
  if (zeta == 0.0) return 1.0;
  const double inv = 1.0 / effective_threshold(n, tau, zeta);
  specfun::CompensatedSum sum;
  // M = m < r: Y - shift ~ Gamma(m, m lambda) with weight exp(-lambda (n-m+j) tau).
  for (int m = 1; m <= r - 1; ++m) {
    for (int j = 0; j <= m; ++j) {
      const double shift = (n - m + j) * tau / m;
      if (!(inv > shift)) continue;
      const double w = std::exp(specfun::log_binomial(n, m) + specfun::log_binomial(m, j) -
                                lambda * (n - m + j) * tau);
      const double p = specfun::reg_gamma_p(m, m * lambda * (inv - shift));
      sum += j % 2 == 0 ? w * p : -w * p;
    }
  }
  // M = r: Gamma(r, r lambda) minus the part with X_(r) beyond tau.
  sum += specfun::reg_gamma_p(r, r * lambda * inv);
  const double bnr = std::exp(specfun::log_binomial(n, r));
  for (int i = 1; i <= r; ++i) {
    const double shift = (n - r + i) * tau / r;
    if (!(inv > shift)) continue;
    const double w = bnr * std::exp(specfun::log_binomial(r - 1, i - 1) - lambda * (n - r + i) * tau) *
                     r / (n - r + i);
    const double p = specfun::reg_gamma_p(r, r * lambda * (inv - shift));
    sum += i % 2 == 0 ? w * p : -w * p;
  }
  const double v = sum.value();
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

HybridRiskEvaluator::HybridRiskEvaluator(int n, int r, double tau, const CostModel& costs,
                                         const AcceptanceCost& g, const GammaPrior& prior)
    : n_(n),
      c_reject_(costs.c_reject),
      weights_(threshold_weights(costs, g)),
      kernel_(n, tau, n == 0 ? std::vector<TailKernel::Term>{} : hybrid_terms(n, r, tau), g, prior),
      scratch_(g.size()) {
  costs.validate();
  prior.validate();
  base_.sampling_term = n * (costs.c_sample - costs.salvage);
  if (n > 0) {
    base_.salvage_term = expected_failures_hybrid(n, r, tau, prior) * costs.salvage;
    base_.time_term = expected_duration_hybrid(n, r, tau, prior) * costs.c_time;
  }
  base_.acceptance_term = g.expectation(prior);
  base_.per_l_weights = weights_;
  fixed_ = base_.sampling_term + base_.salvage_term + base_.time_term;
}

RiskBreakdown HybridRiskEvaluator::breakdown(double zeta) const {
  RiskBreakdown out = base_;
  if (n_ == 0) {
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

double HybridRiskEvaluator::risk(double zeta) const {
  if (n_ == 0) return breakdown(zeta).total;
  kernel_.evaluate(zeta, scratch_);
  double t = 0.0;
  for (std::size_t l = 0; l < weights_.size(); ++l) t += weights_[l] * scratch_[l];
  return fixed_ + base_.acceptance_term + t;
}

double HybridRiskEvaluator::risk(const ZetaGridPowers& powers, std::size_t k) const {
  if (n_ == 0) return breakdown(powers.zeta(k)).total;
  kernel_.evaluate(powers, k, scratch_);
  double t = 0.0;
  for (std::size_t l = 0; l < weights_.size(); ++l) t += weights_[l] * scratch_[l];
  return fixed_ + base_.acceptance_term + t;
}

RiskBreakdown bayes_risk_hybrid(const HybridPlan& plan, const CostModel& costs,
                                const AcceptanceCost& g, const GammaPrior& prior) {
  plan.validate();
  check_stability_cap(plan.n);
  return HybridRiskEvaluator(plan.n, plan.r, plan.tau, costs, g, prior).breakdown(plan.zeta);
}

}  // namespace dsplan
