#include "dsplan/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dsplan/errors.hpp"

namespace dsplan {

void GammaPrior::validate() const {
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
    throw ValidationError("gamma prior needs shape > 0 and rate > 0");
  }
}

namespace specfun {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

// Continued fraction for I_x(a, b), valid (fast) for x < (a+1)/(a+b+2).
double beta_cf(double x, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw DomainError("reg_inc_beta: continued fraction did not converge");
}

double gamma_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
  }
  throw DomainError("reg_gamma_p: series did not converge");
}

double gamma_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
    }
  }
  throw DomainError("reg_gamma_q: continued fraction did not converge");
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double gamma_pdf(double x, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw DomainError("gamma_pdf: shape and rate must be positive");
  if (!(x >= 0.0)) throw DomainError("gamma_pdf: x must be nonnegative");
  if (x == 0.0) {
    if (shape < 1.0) return std::numeric_limits<double>::infinity();
    return shape == 1.0 ? rate : 0.0;
  }
  if (std::isinf(x)) return 0.0;
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x - log_gamma(shape));
}

double reg_inc_beta(double x, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("reg_inc_beta: parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("reg_inc_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = log_gamma(alpha + beta) - log_gamma(alpha) - log_gamma(beta) +
                           alpha * std::log(x) + beta * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (alpha + 1.0) / (alpha + beta + 2.0)) {
    return front * beta_cf(x, alpha, beta) / alpha;
  }
  return 1.0 - front * beta_cf(1.0 - x, beta, alpha) / beta;
}

double reg_inc_beta_int(double x, int m, double beta) {
  if (m < 1 || !(beta > 0.0)) throw DomainError("reg_inc_beta_int: need m >= 1 and beta > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("reg_inc_beta_int: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i < m; ++i) {
    term *= (beta + i - 1.0) / i * x;
    sum += term;
  }
  const double value = 1.0 - std::exp(beta * std::log1p(-x)) * sum;
  return value < 0.0 ? 0.0 : value;
}

double reg_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw DomainError("reg_gamma_p: shape must be positive");
  if (!(x >= 0.0)) throw DomainError("reg_gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return gamma_series(a, x);
  return 1.0 - gamma_cf(a, x);
}

double reg_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw DomainError("reg_gamma_q: shape must be positive");
  if (!(x >= 0.0)) throw DomainError("reg_gamma_q: x must be nonnegative");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - gamma_series(a, x);
  return gamma_cf(a, x);
}

double prior_moment(const GammaPrior& prior, double p) {
  if (!(p >= 0.0)) throw DomainError("prior_moment: order must be nonnegative");
  prior.validate();
  if (p == 0.0) return 1.0;
  return std::exp(log_gamma(prior.shape + p) - log_gamma(prior.shape) - p * std::log(prior.rate));
}

}  // namespace specfun
}  // namespace dsplan
