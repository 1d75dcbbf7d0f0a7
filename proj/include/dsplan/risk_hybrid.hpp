#pragma once

#include <span>
#include <vector>

#include "dsplan/model.hpp"
#include "dsplan/risk_type1.hpp"
#include "dsplan/specfun.hpp"
#include "dsplan/tail_kernel.hpp"

namespace dsplan {

struct HybridRiskTerm {
  double exponent_shift = 0.0;
  int j = 0;
  int m = 0;
  double value = 0.0;
};

/// R_{p,j,m} = Gamma(a+p) / C_{j,m}^{a+p} * I_{S*}(m, a+p), using the
/// continued-fraction incomplete beta.
double term_R(double p, int j, int m, int n, double tau, double zeta, const GammaPrior& prior);

/// P(N = k) for N ~ marginal Binomial(n, 1 - exp(-lambda tau)).
double failure_count_pmf(int n, int k, double tau, const GammaPrior& prior);

double expected_failures_hybrid(int n, int r, double tau, const GammaPrior& prior);

/// E[min(X_(r), tau)].
double expected_duration_hybrid(int n, int r, double tau, const GammaPrior& prior);

/// P(lambda_hat >= zeta | lambda).
double tail_probability_hybrid(int n, int r, double tau, double zeta, double lambda);

class HybridRiskEvaluator {
 public:
  HybridRiskEvaluator(int n, int r, double tau, const CostModel& costs, const AcceptanceCost& g,
                      const GammaPrior& prior);

  RiskBreakdown breakdown(double zeta) const;
  double risk(double zeta) const;
  /// risk(powers.zeta(k)) using the cached grid powers.
  double risk(const ZetaGridPowers& powers, std::size_t k) const;
  double zeta_floor() const { return kernel_.zeta_floor(); }

  /// Tail integrals T_l at a grid point; risk = zeta_free_part() + sum_l weights()[l] T_l.
  void tails(const ZetaGridPowers& powers, std::size_t k, std::span<double> out) const {
    kernel_.evaluate(powers, k, out);
  }
  std::span<const double> weights() const { return weights_; }
  double zeta_free_part() const { return fixed_ + base_.acceptance_term; }
  double fixed_part() const { return fixed_; }

 private:
  int n_;
  double c_reject_;
  RiskBreakdown base_;
  double fixed_;
  std::vector<double> weights_;
  TailKernel kernel_;
  mutable std::vector<double> scratch_;
};

RiskBreakdown bayes_risk_hybrid(const HybridPlan& plan, const CostModel& costs,
                                const AcceptanceCost& g, const GammaPrior& prior);

}  // namespace dsplan
