#pragma once

#include <cmath>

namespace dsplan {

/// Gamma(a, b) prior on the exponential failure rate: shape a, rate b.
struct GammaPrior {
  double shape;
  double rate;

  void validate() const;
};

namespace specfun {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// Gamma density with the given shape and rate evaluated at x >= 0.
double gamma_pdf(double x, double shape, double rate);

/// Regularized incomplete beta I_x(alpha, beta).
///
/// Lentz continued fraction, switching to the complementary fraction
/// I_x = 1 - I_{1-x}(beta, alpha) when x > (alpha + 1) / (alpha + beta + 2).
double reg_inc_beta(double x, double alpha, double beta);

/// I_x(m, beta) for a positive integer first parameter, via the terminating
/// series 1 - (1-x)^beta * sum_{i<m} (beta)_i / i! x^i.
double reg_inc_beta_int(double x, int m, double beta);

/// Regularized lower incomplete gamma P(a, x).
double reg_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_gamma_q(double a, double x);

/// E[lambda^p] = Gamma(a + p) / (Gamma(a) b^p) under the prior.
double prior_moment(const GammaPrior& prior, double p);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace specfun
}  // namespace dsplan
