#pragma once

#include <functional>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "dsplan/rng.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan {

/// Threshold value meaning "accept without looking at the data".
inline constexpr double kAlwaysAccept = std::numeric_limits<double>::infinity();

/// Per-item sampling cost Cs, per-unit-time cost C_tau, rejection cost Cr and
/// per-item salvage value rs.
struct CostModel {
  double c_sample = 0.0;
  double c_time = 0.0;
  double c_reject = 0.0;
  double salvage = 0.0;

  void validate() const;
};

/// Acceptance cost g(lambda) = sum_l a_l lambda^{p_l}.
class AcceptanceCost {
 public:
  struct Term {
    double coefficient;
    double exponent;
  };

  AcceptanceCost() = default;
  explicit AcceptanceCost(std::vector<Term> terms);

  /// a_0 + a_1 l + ... + a_k l^k from the coefficient list.
  static AcceptanceCost polynomial(std::span<const double> coefficients);
  static AcceptanceCost quadratic(double a0, double a1, double a2);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  double constant() const { return terms_.front().coefficient; }

  double operator()(double lambda) const;

  /// sum_l a_l E[lambda^{p_l}], i.e. the risk of accepting without sampling.
  double expectation(const GammaPrior& prior) const;

  /// Smallest lambda with g(lambda) >= level; 0 if g(0) >= level and +inf if
  /// g never reaches it.
  double crossing(double level) const;

 private:
  std::vector<Term> terms_;
};

struct Type1Plan {
  int n = 0;
  double tau = 0.0;
  double zeta = 0.0;

  void validate() const;
};

struct HybridPlan {
  int n = 0;
  int r = 0;
  double tau = 0.0;
  double zeta = 0.0;

  void validate() const;
};

using Plan = std::variant<Type1Plan, HybridPlan>;

struct Type1Scheme {
  int n;
  double tau;
};

struct HybridScheme {
  int n;
  int r;
  double tau;
};

using Scheme = std::variant<Type1Scheme, HybridScheme>;

Scheme scheme_of(const Plan& plan);
double threshold_of(const Plan& plan);

/// Censored life-test record.
struct LifeTestOutcome {
  int items = 0;
  std::vector<double> ordered_failures;
  int m = 0;
  double duration = 0.0;
};

/// Law of the rate estimator given lambda: an atom at zero plus an absolutely
/// continuous part on (lower_support, inf).
struct EstimatorLaw {
  double point_mass_at_zero;
  std::function<double(double)> continuous_density;
  double lower_support;
};

EstimatorLaw estimator_law_type1(int n, double tau, double lambda);
EstimatorLaw estimator_law_hybrid(int n, int r, double tau, double lambda);

enum class Decision { accept, reject };

/// Total time on test: sum of observed failures plus the exposure of the
/// survivors up to the end of the test.
double total_time_on_test(const LifeTestOutcome& outcome);

double lambda_hat_type1(const LifeTestOutcome& outcome, int n, double tau);
double lambda_hat_hybrid(const LifeTestOutcome& outcome, int n, int r, double tau);

/// Accept iff estimate < zeta; a tie rejects.
Decision decide(double estimate, double zeta);

/// Runs one censored life test on n exponential(lambda) items.
LifeTestOutcome draw_life_test(double lambda, const Scheme& scheme, CounterStream& stream);

/// n Cs - (n - M) rs + tau* C_tau + (g(lambda) on accept, Cr on reject).
double loss_of(const LifeTestOutcome& outcome, Decision decision, double lambda,
               const CostModel& costs, const AcceptanceCost& g);

}  // namespace dsplan
