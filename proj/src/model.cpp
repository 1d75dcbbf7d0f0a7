#include "dsplan/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>
#include <type_traits>

#include "dsplan/errors.hpp"

namespace dsplan {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

double sum_of(const std::vector<double>& v) {
  specfun::CompensatedSum s;
  for (double x : v) s += x;
  return s.value();
}

}  // namespace

void CostModel::validate() const {
  if (!finite_nonneg(c_sample) || !finite_nonneg(c_time) || !finite_nonneg(c_reject) ||
      !finite_nonneg(salvage)) {
    throw ValidationError("costs must be finite and nonnegative");
  }
  if (!(c_sample >= salvage)) {
    throw ValidationError("sampling cost must not be below the salvage value");
  }
}

AcceptanceCost::AcceptanceCost(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ValidationError("acceptance cost needs at least a constant term");
  if (terms_.front().exponent != 0.0) {
    throw ValidationError("first acceptance-cost term must have exponent 0");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!finite_nonneg(terms_[i].coefficient) || !finite_nonneg(terms_[i].exponent)) {
      throw ValidationError("acceptance-cost coefficients and exponents must be finite and >= 0");
    }
    if (i > 0 && !(terms_[i].exponent > terms_[i - 1].exponent)) {
      throw ValidationError("acceptance-cost exponents must be strictly increasing");
    }
  }
}

AcceptanceCost AcceptanceCost::polynomial(std::span<const double> coefficients) {
  std::vector<Term> terms;
  terms.reserve(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms.push_back({coefficients[i], static_cast<double>(i)});
  }
  return AcceptanceCost(std::move(terms));
}

AcceptanceCost AcceptanceCost::quadratic(double a0, double a1, double a2) {
  const double c[] = {a0, a1, a2};
  return polynomial(c);
}

double AcceptanceCost::operator()(double lambda) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    v += t.exponent == 0.0 ? t.coefficient : t.coefficient * std::pow(lambda, t.exponent);
  }
  return v;
}

double AcceptanceCost::expectation(const GammaPrior& prior) const {
  specfun::CompensatedSum s;
  for (const auto& t : terms_) s += t.coefficient * specfun::prior_moment(prior, t.exponent);
  return s.value();
}

double AcceptanceCost::crossing(double level) const {
  if ((*this)(0.0) >= level) return 0.0;
  const bool grows = std::any_of(terms_.begin() + 1, terms_.end(),
                                 [](const Term& t) { return t.coefficient > 0.0; });
  if (!grows) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = 1.0;
  while ((*this)(hi) < level) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

void Type1Plan::validate() const {
  if (n < 0) throw ValidationError("plan: n must be >= 0");
  if (!finite_nonneg(tau)) throw ValidationError("plan: tau must be finite and >= 0");
  if (!(zeta >= 0.0)) throw ValidationError("plan: zeta must be >= 0");
}

void HybridPlan::validate() const {
  if (n < 0) throw ValidationError("plan: n must be >= 0");
  if (n >= 1 && (r < 1 || r > n)) throw ValidationError("plan: need 1 <= r <= n");
  if (n == 0 && r != 0) throw ValidationError("plan: r must be 0 when n is 0");
  if (!finite_nonneg(tau)) throw ValidationError("plan: tau must be finite and >= 0");
  if (!(zeta >= 0.0)) throw ValidationError("plan: zeta must be >= 0");
}

Scheme scheme_of(const Plan& plan) {
  return std::visit(
      [](const auto& p) -> Scheme {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Type1Plan>) {
          return Type1Scheme{p.n, p.tau};
        } else {
          return HybridScheme{p.n, p.r, p.tau};
        }
      },
      plan);
}

double threshold_of(const Plan& plan) {
  return std::visit([](const auto& p) { return p.zeta; }, plan);
}

EstimatorLaw estimator_law_type1(int n, double tau, double lambda) {
  if (n < 1 || !(tau > 0.0) || !(lambda > 0.0)) {
    throw DomainError("estimator_law_type1: need n >= 1, tau > 0, lambda > 0");
  }
  const double p = std::exp(-n * lambda * tau);
  auto density = [n, tau, lambda, p](double y) {
    if (!(y > 1.0 / (n * tau))) return 0.0;
    specfun::CompensatedSum s;
    for (int m = 1; m <= n; ++m) {
      for (int j = 0; j <= m; ++j) {
        const double shift = (n - m + j) * tau / m;
        const double v = 1.0 / y - shift;
        if (v <= 0.0) continue;
        const double w = std::exp(specfun::log_binomial(n, m) + specfun::log_binomial(m, j) -
                                  lambda * (n - m + j) * tau);
        const double term = w * specfun::gamma_pdf(v, m, m * lambda) / (y * y);
        s += (j % 2 == 0) ? term : -term;
      }
    }
    return s.value() / (1.0 - p);
  };
  return {p, density, 1.0 / (n * tau)};
}

EstimatorLaw estimator_law_hybrid(int n, int r, double tau, double lambda) {
  if (n < 1 || r < 1 || r > n || !(tau > 0.0) || !(lambda > 0.0)) {
    throw DomainError("estimator_law_hybrid: need 1 <= r <= n, tau > 0, lambda > 0");
  }
  const double p = std::exp(-n * lambda * tau);
  auto density = [n, r, tau, lambda, p](double y) {
    if (!(y > 1.0 / (n * tau))) return 0.0;
    const double inv = 1.0 / y;
    specfun::CompensatedSum s;
    for (int m = 1; m <= r - 1; ++m) {
      for (int j = 0; j <= m; ++j) {
        const double v = inv - (n - m + j) * tau / m;
        if (v <= 0.0) continue;
        const double w = std::exp(specfun::log_binomial(n, m) + specfun::log_binomial(m, j) -
                                  lambda * (n - m + j) * tau);
        const double term = w * specfun::gamma_pdf(v, m, m * lambda);
        s += (j % 2 == 0) ? term : -term;
      }
    }
    s += specfun::gamma_pdf(inv, r, r * lambda);
    for (int i = 1; i <= r; ++i) {
      const double v = inv - (n - r + i) * tau / r;
      if (v <= 0.0) continue;
      const double w = r * std::exp(specfun::log_binomial(n, r) + specfun::log_binomial(r - 1, i - 1) -
                                    lambda * (n - r + i) * tau) /
                       (n - r + i);
      const double term = w * specfun::gamma_pdf(v, r, r * lambda);
      s += (i % 2 == 0) ? term : -term;
    }
    return s.value() / (y * y * (1.0 - p));
  };
  return {p, density, 1.0 / (n * tau)};
}

double total_time_on_test(const LifeTestOutcome& outcome) {
  const int survivors = outcome.items - outcome.m;
  return sum_of(outcome.ordered_failures) + survivors * outcome.duration;
}

double lambda_hat_type1(const LifeTestOutcome& outcome, int n, double tau) {
  if (outcome.m != static_cast<int>(outcome.ordered_failures.size()) || outcome.m > n) {
    throw ValidationError("lambda_hat_type1: outcome inconsistent with n");
  }
  if (outcome.m == 0) return 0.0;
  return outcome.m / (sum_of(outcome.ordered_failures) + (n - outcome.m) * tau);
}

double lambda_hat_hybrid(const LifeTestOutcome& outcome, int n, int r, double tau) {
  if (outcome.m != static_cast<int>(outcome.ordered_failures.size()) || outcome.m > r || r > n) {
    throw ValidationError("lambda_hat_hybrid: outcome inconsistent with (n, r)");
  }
  if (outcome.m == 0) return 0.0;
  const double sum = sum_of(outcome.ordered_failures);
  if (outcome.m < r) return outcome.m / (sum + (n - outcome.m) * tau);
  return r / (sum + (n - r) * outcome.ordered_failures.back());
}

Decision decide(double estimate, double zeta) {
  return estimate < zeta ? Decision::accept : Decision::reject;
}

LifeTestOutcome draw_life_test(double lambda, const Scheme& scheme, CounterStream& stream) {
  if (!(lambda > 0.0)) throw DomainError("draw_life_test: lambda must be positive");
  const auto [n, r, tau] = std::visit(
      [](const auto& s) -> std::tuple<int, int, double> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Type1Scheme>) {
          return {s.n, s.n + 1, s.tau};
        } else {
          return {s.n, s.r, s.tau};
        }
      },
      scheme);
  LifeTestOutcome out;
  out.items = n;
  out.duration = tau;
  if (n == 0 || tau <= 0.0) {
    // Type-I always runs the clock to tau; a hybrid test with nothing on it ends at once.
    if (std::holds_alternative<HybridScheme>(scheme)) out.duration = 0.0;
    return out;
  }
  // Successive order statistics through exponential spacings.
  double t = 0.0;
  for (int i = 0; i < n; ++i) {
    t += -std::log(stream.uniform()) / ((n - i) * lambda);
    if (t > tau) break;
    out.ordered_failures.push_back(t);
    if (static_cast<int>(out.ordered_failures.size()) == r) {
      out.duration = t;
      break;
    }
  }
  out.m = static_cast<int>(out.ordered_failures.size());
  return out;
}

double loss_of(const LifeTestOutcome& outcome, Decision decision, double lambda,
               const CostModel& costs, const AcceptanceCost& g) {
  const double fixed = outcome.items * costs.c_sample - (outcome.items - outcome.m) * costs.salvage +
                       outcome.duration * costs.c_time;
  return fixed + (decision == Decision::accept ? g(lambda) : costs.c_reject);
}

}  // namespace dsplan
