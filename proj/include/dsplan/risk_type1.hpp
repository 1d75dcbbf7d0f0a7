#pragma once

#include <span>
#include <vector>

#include "dsplan/model.hpp"
#include "dsplan/specfun.hpp"
#include "dsplan/tail_kernel.hpp"

namespace dsplan {

/// Additive decomposition of a Bayes risk.
struct RiskBreakdown {
  double sampling_term = 0.0;    // n (Cs - rs)
  double salvage_term = 0.0;     // E(M) rs
  double time_term = 0.0;        // duration cost
  double acceptance_term = 0.0;  // sum a_l mu_{p_l}
  double threshold_term = 0.0;   // sum C_l T_l
  double total = 0.0;
  std::vector<double> per_l_weights;  // C_0 = Cr - a_0, C_l = -a_l
};

/// C_l weights for the threshold term.
std::vector<double> threshold_weights(const CostModel& costs, const AcceptanceCost& g);

/// E(M) by the alternating double sum.
double expected_failures_type1(int n, double tau, const GammaPrior& prior);

/// P(lambda_hat >= zeta | lambda).
double tail_probability_type1(int n, double tau, double zeta, double lambda);

/// Risk of a Type-I plan at fixed (n, tau) for any zeta; precomputes the
/// zeta-independent parts once.
class Type1RiskEvaluator {
 public:
  Type1RiskEvaluator(int n, double tau, const CostModel& costs, const AcceptanceCost& g,
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

  /// Part of the risk that does not depend on zeta.
  double fixed_part() const { return fixed_; }

 private:
  int n_;
  double tau_;
  double c_reject_;
  RiskBreakdown base_;
  double fixed_;
  std::vector<double> weights_;
  TailKernel kernel_;
  mutable std::vector<double> scratch_;
};

RiskBreakdown bayes_risk_type1(const Type1Plan& plan, const CostModel& costs,
                               const AcceptanceCost& g, const GammaPrior& prior);

}  // namespace dsplan
