#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dsplan/model.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan {

struct SearchBounds {
  int n_max = 0;
  double tau_max = 0.0;
  double zeta_max = 0.0;
};

struct GridSpec {
  double zeta_step = 0.0125;
  double tau_step = 0.0125;
  double zeta_cap = 6.0;
  double alpha = 0.01;
  /// Hard limit on tau grid points per (n, r); the scan stops there and flags it.
  int max_tau_points = 4000;
  int runner_up_count = 5;
  /// Largest sample size searched; 0 leaves only the risk bound.
  int max_n = 0;
  bool keep_scan_log = false;

  void validate() const;
  int zeta_points() const;
  double zeta_at(int k) const { return k * zeta_step; }
  double tau_at(int k) const { return k * tau_step; }
};

/// Best plan found at one (n, r) pair, or one (n, r, tau) cell in the scan log.
/// r is 0 for Type-I.
struct ScanEntry {
  int n = 0;
  int r = 0;
  double tau = 0.0;
  double zeta = 0.0;
  double risk = 0.0;
};

struct OptimumReport {
  Plan plan;
  double risk = 0.0;
  /// Best plans of the other (n, r) pairs, ascending risk.
  std::vector<ScanEntry> runner_ups;
  /// Per (n, r, tau) minima over zeta for every cell that was fully scanned.
  std::vector<ScanEntry> scan_log;
  SearchBounds bounds;
  bool tau_on_boundary = false;
  bool tau_truncated = false;
  std::int64_t evaluations = 0;
};

/// b (alpha^{-1/a} - 1): P(X > tau_alpha) = alpha under the marginal lifetime law.
double tau_alpha(const GammaPrior& prior, double alpha);

SearchBounds bounds_type1(const CostModel& costs, const AcceptanceCost& g,
                          const GammaPrior& prior, double probe_risk, double alpha = 0.01,
                          double zeta_cap = 6.0);
SearchBounds bounds_hybrid(const CostModel& costs, const AcceptanceCost& g,
                           const GammaPrior& prior, double probe_risk, double alpha = 0.01,
                           double zeta_cap = 6.0);

OptimumReport optimize_type1(const CostModel& costs, const AcceptanceCost& g,
                             const GammaPrior& prior, const GridSpec& grid = {});
OptimumReport optimize_hybrid(const CostModel& costs, const AcceptanceCost& g,
                              const GammaPrior& prior, const GridSpec& grid = {});

/// Lower bound of the Bayes risk over every zeta > 0 at fixed sample size and
/// time-on-test exposure s = n tau, minus the zeta-free costs:
///   E[min(g, Cr)] + E[exp(-s lambda) (g - Cr)^+].
class DecisionFloor {
 public:
  DecisionFloor(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior);
  double base() const { return base_; }
  double at(double exposure) const;

 private:
  double excess(double s) const;

  double c_reject_;
  double crossing_;
  double base_;
  GammaPrior prior_;
  std::vector<AcceptanceCost::Term> terms_;
};

}  // namespace dsplan
