#include "dsplan/mc_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "dsplan/errors.hpp"

namespace dsplan {

namespace {

template <std::size_t K>
struct Partial {
  std::array<double, K> sum{};
  std::array<double, K> sum_sq{};
};

template <std::size_t K>
Partial<K> run_block(const MCConfig& mc, const TrialFn<K>& fn, std::int64_t first, std::int64_t last) {
  std::array<specfun::CompensatedSum, K> s;
  std::array<specfun::CompensatedSum, K> q;
  for (std::int64_t i = first; i < last; ++i) {
    CounterStream stream(mc.seed, static_cast<std::uint64_t>(i));
    const auto v = fn(stream);
    for (std::size_t k = 0; k < K; ++k) {
      s[k] += v[k];
      q[k] += v[k] * v[k];
    }
  }
  Partial<K> p;
  for (std::size_t k = 0; k < K; ++k) {
    p.sum[k] = s[k].value();
    p.sum_sq[k] = q[k].value();
  }
  return p;
}

template <std::size_t K>
std::array<MCEstimate, K> run_trials_impl(const MCConfig& mc, const TrialFn<K>& fn) {
  mc.validate();
  const std::int64_t blocks = (mc.trials + mc.batch - 1) / mc.batch;
  std::vector<Partial<K>> partials(static_cast<std::size_t>(blocks));
  auto block = [&](std::int64_t b) {
    const std::int64_t first = b * mc.batch;
    partials[b] = run_block<K>(mc, fn, first, std::min(mc.trials, first + mc.batch));
  };
  int workers = mc.workers > 0 ? mc.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<std::int64_t>(1, blocks)));
  if (workers == 1) {
    for (std::int64_t b = 0; b < blocks; ++b) block(b);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t b = w; b < blocks; b += workers) block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::array<MCEstimate, K> out;
  const double n = static_cast<double>(mc.trials);
  for (std::size_t k = 0; k < K; ++k) {
    specfun::CompensatedSum s;
    specfun::CompensatedSum q;
    for (const auto& p : partials) {
      s += p.sum[k];
      q += p.sum_sq[k];
    }
    const double mean = s.value() / n;
    double var = 0.0;
    if (mc.trials > 1) var = std::max(0.0, (q.value() - n * mean * mean) / (n - 1.0));
    out[k] = {mean, std::sqrt(var / n), mc.trials};
  }
  return out;
}

}  // namespace

void MCConfig::validate() const {
  if (trials < 1) throw ValidationError("mc: trials must be >= 1");
  if (batch < 1) throw ValidationError("mc: batch must be >= 1");
  if (workers < 0) throw ValidationError("mc: workers must be >= 0");
}

std::array<MCEstimate, 1> run_trials(const MCConfig& mc, const TrialFn<1>& fn) {
  return run_trials_impl<1>(mc, fn);
}

std::array<MCEstimate, 2> run_trials(const MCConfig& mc, const TrialFn<2>& fn) {
  return run_trials_impl<2>(mc, fn);
}

double draw_rate(const GammaPrior& prior, CounterStream& stream) {
  std::gamma_distribution<double> dist(prior.shape, 1.0 / prior.rate);
  double v = dist(stream);
  // A zero draw is possible for tiny shapes; nudge it to the smallest positive rate.
  return v > 0.0 ? v : std::numeric_limits<double>::min();
}

double lambda_hat(const LifeTestOutcome& outcome, const Scheme& scheme) {
  return std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Type1Scheme>) {
          return lambda_hat_type1(outcome, s.n, s.tau);
        } else {
          return lambda_hat_hybrid(outcome, s.n, s.r, s.tau);
        }
      },
      scheme);
}

MCEstimate simulate_dsp_risk(const Plan& plan, const CostModel& costs, const AcceptanceCost& g,
                             const GammaPrior& prior, const MCConfig& mc) {
  std::visit([](const auto& p) { p.validate(); }, plan);
  costs.validate();
  prior.validate();
  const Scheme scheme = scheme_of(plan);
  const double zeta = threshold_of(plan);
  return run_trials(mc, TrialFn<1>([&](CounterStream& stream) {
           const double lambda = draw_rate(prior, stream);
           const LifeTestOutcome out = draw_life_test(lambda, scheme, stream);
           const Decision d = decide(lambda_hat(out, scheme), zeta);
           return std::array<double, 1>{loss_of(out, d, lambda, costs, g)};
         }))[0];
}

MCEstimate simulate_tail_probability(double lambda, const Plan& plan, const MCConfig& mc) {
  if (!(lambda > 0.0)) throw DomainError("simulate_tail_probability: lambda must be positive");
  std::visit([](const auto& p) { p.validate(); }, plan);
  const Scheme scheme = scheme_of(plan);
  const double zeta = threshold_of(plan);
  return run_trials(mc, TrialFn<1>([&](CounterStream& stream) {
           const LifeTestOutcome out = draw_life_test(lambda, scheme, stream);
           return std::array<double, 1>{lambda_hat(out, scheme) >= zeta ? 1.0 : 0.0};
         }))[0];
}

std::pair<MCEstimate, MCEstimate> simulate_moments(const Scheme& scheme, const GammaPrior& prior,
                                                   const MCConfig& mc) {
  prior.validate();
  const auto est = run_trials(mc, TrialFn<2>([&](CounterStream& stream) {
    const double lambda = draw_rate(prior, stream);
    const LifeTestOutcome out = draw_life_test(lambda, scheme, stream);
    return std::array<double, 2>{static_cast<double>(out.m), out.duration};
  }));
  return {est[0], est[1]};
}

}  // namespace dsplan
