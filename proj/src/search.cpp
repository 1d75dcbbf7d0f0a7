#include "dsplan/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alternating.hpp"
#include "dsplan/errors.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"
#include "dsplan/tail_kernel.hpp"

namespace dsplan {

namespace {

constexpr double kPruneSlack = 1e-9;

double no_sampling_floor(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior,
                         double probe_risk) {
  return std::min({costs.c_reject, g.expectation(prior), probe_risk});
}

void require_sample_bound(double unit, const GridSpec& grid) {
  if (unit <= 0.0 && grid.max_n == 0) {
    throw ValidationError("sampling cost equals the salvage value, so the sample size is unbounded; set max_n");
  }
}

void keep_runner_ups(std::vector<ScanEntry>& cells, const ScanEntry& winner, double ceiling,
                     int count) {
  std::erase_if(cells, [&](const ScanEntry& e) {
    return (e.n == winner.n && e.r == winner.r) || !(e.risk < ceiling);
  });
  std::stable_sort(cells.begin(), cells.end(),
                   [](const ScanEntry& x, const ScanEntry& y) { return x.risk < y.risk; });
  if (static_cast<int>(cells.size()) > count) cells.resize(count);
}

struct ScanState {
  ScanEntry best;
  std::vector<ScanEntry> pair_minima;
  std::vector<ScanEntry> log;
  std::int64_t evaluations = 0;
  bool truncated = false;
  // Scratch reused across cells.
  std::vector<double> tails;
  std::vector<double> risks;
  std::vector<char> done;
  std::vector<std::size_t> ends;
  double no_sampling_risk = 0.0;

  // Anything above this value can change neither the optimum nor the reported
  // runner-ups. Runner-ups must beat both no-sampling actions, so the cutoff is
  // the smaller of that risk and the (count + 1)-th smallest candidate so far.
  double cutoff(int count) const {
    if (count == 0) return best.risk;
    std::vector<double> v{no_sampling_risk};
    for (const auto& e : pair_minima) v.push_back(e.risk);
    if (static_cast<int>(v.size()) <= count) return no_sampling_risk;
    std::nth_element(v.begin(), v.begin() + count, v.end());
    return std::min(v[count], no_sampling_risk);
  }
};

constexpr std::size_t kZetaBlock = 16;

// Risks closer than this (relative) are ties; the plan visited first wins,
// which is the smaller n, then tau, then zeta.
constexpr double kTieTolerance = 1e-12;

bool improves(double candidate, double incumbent) {
  if (std::isinf(incumbent)) return candidate < incumbent;
  return candidate < incumbent - kTieTolerance * std::max(1.0, std::abs(incumbent));
}

// Lower bound on E[min(X_(r), tau)], any n:
//   sum_{k<r} C(n,k) sum_j (-1)^j C(k,j) (b/c) (1 - (b/(b+c tau))^{a-1}) / (a-1),  c = n-k+j,
// less a rounding margin proportional to the absolute size of the terms.
double duration_floor(int n, int r, double tau, const GammaPrior& prior) {
  const double a = prior.shape;
  const double b = prior.rate;
  specfun::CompensatedSum sum;
  double magnitude = 0.0;
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j <= k; ++j) {
      const double c = n - k + j;
      const double L = std::log1p(c * tau / b);
      const double kern = std::abs((a - 1.0) * L) < 1e-12 ? L : -std::expm1(-(a - 1.0) * L) / (a - 1.0);
      const double v = std::exp(specfun::log_binomial(n, k) + specfun::log_binomial(k, j)) * b / c * kern;
      sum += j % 2 == 0 ? v : -v;
      magnitude += v;
    }
  }
  return std::max(0.0, sum.value() - 1e-12 * magnitude);
}

// Bayes risk of the accept/reject decision after observing the first r
// failures with no time limit; TTT ~ Gamma(r, lambda) is sufficient, and a
// Type-I hybrid test with target r sees no more than that.
//   Cr I_x(r, a) + sum_l a_l mu_l (1 - I_x(r, a + p_l)),  x = t/(b+t),
// where t solves E[g | r, t] = Cr.
double stopped_decision_floor(int r, double c_reject, const AcceptanceCost& g, const GammaPrior& prior) {
  const double a = prior.shape;
  const double b = prior.rate;
  auto posterior_cost = [&](double y) {
    specfun::CompensatedSum s;
    for (const auto& t : g.terms()) {
      s += t.coefficient *
           std::exp(specfun::log_gamma(a + r + t.exponent) - specfun::log_gamma(a + r) - t.exponent * std::log(y));
    }
    return s.value();
  };
  double x = 0.0;
  if (c_reject <= g.constant()) {
    x = 1.0;
  } else if (posterior_cost(b) > c_reject) {
    double lo = b;
    double hi = 2.0 * b;
    while (posterior_cost(hi) > c_reject) {
      lo = hi;
      hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (posterior_cost(mid) > c_reject ? lo : hi) = mid;
    }
    // The smaller end keeps the value a lower bound.
    x = (lo - b) / lo;
  }
  specfun::CompensatedSum d;
  d += c_reject * (x >= 1.0 ? 1.0 : specfun::reg_inc_beta(x, r, a));
  for (const auto& t : g.terms()) {
    const double upper = x >= 1.0 ? 0.0 : 1.0 - specfun::reg_inc_beta(x, r, a + t.exponent);
    d += t.coefficient * specfun::prior_moment(prior, t.exponent) * upper;
  }
  return d.value();
}

// Bayes risk of the decision after watching failures of a renewed population
// over total exposure s: K ~ Poisson(lambda s) is sufficient and the marginal
// of K under lambda^p times the prior is negative binomial. Any Type-I or
// hybrid test with exposure at most s reveals less. The sum is truncated,
// which keeps it a lower bound.
double exposure_decision_floor(double s, double c_reject, const AcceptanceCost& g, const GammaPrior& prior) {
  const double a = prior.shape;
  const double b = prior.rate;
  const double q = b / (b + s);
  const double p = s / (b + s);
  const auto terms = g.terms();
  // NB(k; alpha, q) for every alpha in {a} and a + p_l, advanced by the
  // ratio (alpha + k) p / (k + 1).
  std::vector<double> alpha(terms.size() + 1, a);
  std::vector<double> weight(terms.size() + 1, c_reject);
  for (std::size_t l = 0; l < terms.size(); ++l) {
    alpha[l + 1] = a + terms[l].exponent;
    weight[l + 1] = terms[l].coefficient * specfun::prior_moment(prior, terms[l].exponent);
  }
  std::vector<double> nb(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) nb[i] = std::exp(alpha[i] * std::log(q));
  specfun::CompensatedSum total;
  double mass = 0.0;
  for (int k = 0; k < 5000; ++k) {
    const double reject = weight[0] * nb[0];
    double accept = 0.0;
    for (std::size_t i = 1; i < nb.size(); ++i) accept += weight[i] * nb[i];
    total += std::min(reject, accept);
    mass += reject + accept;
    if (k > 2 && reject + accept < 1e-16 * mass) break;
    for (std::size_t i = 0; i < nb.size(); ++i) nb[i] *= (alpha[i] + k) * p / (k + 1);
  }
  return total.value() * (1.0 - 1e-12);
}

// Lower bound on the risk of every plan with n items on the tau grid: sampling
// and salvage cost, the cheapest possible duration cost and the decision floor.
double size_floor_type1(int n, int n_tau, double unit, const CostModel& costs, const AcceptanceCost& g,
                        const DecisionFloor& floor, const GridSpec& grid, const GammaPrior& prior) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n_tau; ++k) {
    const double tau = grid.tau_at(k);
    const double info = std::max(floor.at(n * tau), exposure_decision_floor(n * tau, costs.c_reject, g, prior));
    const double failures = -n * std::expm1(-prior.shape * std::log1p(tau / prior.rate)) * (1.0 - 1e-12);
    best = std::min(best, costs.c_time * tau + costs.salvage * failures + info);
  }
  return n * unit + best;
}

// Lower bounds on E[min(N, r)] for r = 1..n, N the number of failures by tau.
std::vector<double> failure_floor(int n, double tau, const GammaPrior& prior) {
  const std::vector<double> pmf = detail::prior_binomial_pmfs(n, tau, prior.shape, prior.rate);
  std::vector<double> out(n + 1, 0.0);
  double below = 0.0;
  double mean_below = 0.0;
  for (int r = 1; r <= n; ++r) {
    below += pmf[r - 1];
    mean_below += (r - 1) * pmf[r - 1];
    out[r] = std::max(0.0, mean_below + r * (1.0 - below) - 1e-9 * r);
  }
  return out;
}

// Hybrid version: each target r is bounded with its own duration, salvage and
// stopped-test decision floor. The duration sum is only formed when the other
// parts leave room below the running minimum.
double size_floor_hybrid(int n, int n_tau, double unit, const CostModel& costs, const AcceptanceCost& g,
                         const DecisionFloor& floor, const GridSpec& grid, const GammaPrior& prior) {
  std::vector<double> stopped(n + 1, floor.base());
  for (int r = 1; r < n; ++r) stopped[r] = std::max(floor.base(), stopped_decision_floor(r, costs.c_reject, g, prior));
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n_tau; ++k) {
    const double tau = grid.tau_at(k);
    const double info = std::max(floor.at(n * tau), exposure_decision_floor(n * tau, costs.c_reject, g, prior));
    const std::vector<double> failures =
        costs.salvage > 0.0 ? failure_floor(n, tau, prior) : std::vector<double>(n + 1, 0.0);
    for (int r = 1; r <= n; ++r) {
      double bound = costs.salvage * failures[r] + std::max(info, stopped[r]);
      if (bound >= best) continue;
      if (costs.c_time > 0.0) bound += costs.c_time * duration_floor(n, r, tau, prior);
      best = std::min(best, bound);
    }
  }
  return n * unit + best;
}

// Beyond the stability cap only the optimum matters, so such sizes are skipped
// unless they could win outright.
bool skip_size(int n, double floor, double best, double cut) {
  if (n > kStabilityCap) return floor > best + kPruneSlack;
  return floor > cut + kPruneSlack;
}

// Scans zeta for one (n, r, tau) cell and folds the result into state.
//
// Every T_l is nonincreasing in zeta, so on a block [lo, hi] of grid points the
// risk is bounded below by taking T_l(hi) for nonnegative weights and T_l(lo)
// for negative ones. Blocks whose bound exceeds the running cell minimum are
// never evaluated; since their values are strictly larger, the reported cell
// minimum and its smallest-zeta tie-break are exact. Grid points at or below
// 1/(n tau) share one value. Without a scan log, blocks above the search cutoff
// are skipped too; the cell minimum is then exact only when it lies below the cutoff.
template <class Evaluator>
ScanEntry scan_zeta(const Evaluator& eval, int n, int r, double tau, const ZetaGridPowers& powers,
                    const GridSpec& grid, double cutoff, ScanState& state) {
  const std::size_t K = powers.size();
  const auto w = eval.weights();
  const std::size_t L = w.size();
  const double base = eval.zeta_free_part();
  const double floor = eval.zeta_floor();
  std::size_t k_floor = 0;
  while (k_floor < K && !(powers.zeta(k_floor) > floor)) ++k_floor;

  state.tails.assign(K * L, 0.0);
  state.risks.assign(K, std::numeric_limits<double>::infinity());
  state.done.assign(K, 0);
  double running = std::numeric_limits<double>::infinity();
  auto visit = [&](std::size_t k) {
    if (state.done[k]) return;
    double* t = &state.tails[k * L];
    if (k < k_floor && k > 0 && state.done[0]) {
      std::copy_n(&state.tails[0], L, t);
    } else {
      eval.tails(powers, k < k_floor ? 0 : k, std::span<double>(t, L));
      ++state.evaluations;
    }
    double v = base;
    for (std::size_t l = 0; l < L; ++l) v += w[l] * t[l];
    state.risks[k] = v;
    state.done[k] = 1;
    running = std::min(running, v);
  };

  if (K > 0) {
    visit(0);
    std::vector<std::size_t>& ends = state.ends;
    ends.clear();
    for (std::size_t k = 0; k < K; k += kZetaBlock) ends.push_back(k);
    if (ends.back() != K - 1) ends.push_back(K - 1);
    for (std::size_t e : ends) visit(e);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
      const std::size_t lo = ends[i];
      const std::size_t hi = ends[i + 1];
      if (hi - lo < 2) continue;
      double bound = base;
      for (std::size_t l = 0; l < L; ++l) {
        bound += w[l] * (w[l] >= 0.0 ? state.tails[hi * L + l] : state.tails[lo * L + l]);
      }
      const double level = grid.keep_scan_log ? running : std::min(running, cutoff);
      if (bound > level + kPruneSlack) continue;
      for (std::size_t k = lo + 1; k < hi; ++k) visit(k);
    }
  }

  ScanEntry cell{n, r, tau, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < K; ++k) {
    if (improves(state.risks[k], cell.risk)) {
      cell.risk = state.risks[k];
      cell.zeta = powers.zeta(k);
    }
  }
  if (grid.keep_scan_log) state.log.push_back(cell);
  if (improves(cell.risk, state.best.risk)) state.best = cell;
  return cell;
}

ZetaGridPowers grid_powers(const GridSpec& grid, const AcceptanceCost& g, const GammaPrior& prior) {
  std::vector<double> zetas;
  for (int k = 1; k <= grid.zeta_points(); ++k) zetas.push_back(grid.zeta_at(k));
  return ZetaGridPowers(zetas, kStabilityCap, g, prior);
}

int tau_points(double tau_max, const GridSpec& grid, ScanState& state) {
  const double k = std::floor(tau_max / grid.tau_step + 1e-9);
  if (k > grid.max_tau_points) {
    state.truncated = true;
    return grid.max_tau_points;
  }
  return static_cast<int>(k);
}

}  // namespace

void GridSpec::validate() const {
  if (!(zeta_step > 0.0) || !(tau_step > 0.0) || !std::isfinite(zeta_step) || !std::isfinite(tau_step)) {
    throw ValidationError("grid steps must be positive and finite");
  }
  if (!(zeta_cap >= zeta_step) || !std::isfinite(zeta_cap)) {
    throw ValidationError("zeta cap must be finite and at least one step");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
  if (max_tau_points < 1) throw ValidationError("max_tau_points must be >= 1");
  if (runner_up_count < 0) throw ValidationError("runner_up_count must be >= 0");
  if (max_n < 0) throw ValidationError("max_n must be >= 0");
}

int GridSpec::zeta_points() const { return static_cast<int>(std::floor(zeta_cap / zeta_step + 1e-9)); }

double tau_alpha(const GammaPrior& prior, double alpha) {
  prior.validate();
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("tau_alpha: alpha must lie in (0, 1)");
  return prior.rate * std::expm1(-std::log(alpha) / prior.shape);
}

SearchBounds bounds_type1(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior,
                          double probe_risk, double alpha, double zeta_cap) {
  costs.validate();
  const double top = no_sampling_floor(costs, g, prior, probe_risk);
  SearchBounds out;
  const double unit = costs.c_sample - costs.salvage;
  out.n_max = unit > 0.0 ? static_cast<int>(std::min(std::floor(top / unit + 1e-12), 1e9))
                         : std::numeric_limits<int>::max();
  out.tau_max = costs.c_time > 0.0 ? top / costs.c_time : tau_alpha(prior, alpha);
  out.zeta_max = zeta_cap;
  return out;
}

SearchBounds bounds_hybrid(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior,
                           double probe_risk, double alpha, double zeta_cap) {
  SearchBounds out = bounds_type1(costs, g, prior, probe_risk, alpha, zeta_cap);
  out.tau_max = tau_alpha(prior, alpha);
  return out;
}

DecisionFloor::DecisionFloor(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior)
    : c_reject_(costs.c_reject),
      crossing_(g.crossing(costs.c_reject)),
      prior_(prior),
      terms_(g.terms().begin(), g.terms().end()) {
  prior.validate();
  base_ = g.expectation(prior) - excess(0.0);
}

// E[exp(-s lambda) (g(lambda) - Cr) 1{lambda > crossing}].
double DecisionFloor::excess(double s) const {
  if (std::isinf(crossing_)) return 0.0;
  const double a = prior_.shape;
  const double b = prior_.rate;
  const double log_norm = a * std::log(b) - specfun::log_gamma(a);
  auto piece = [&](double p) {
    const double beta = a + p;
    return std::exp(log_norm + specfun::log_gamma(beta) - beta * std::log(b + s)) *
           specfun::reg_gamma_q(beta, (b + s) * crossing_);
  };
  specfun::CompensatedSum sum;
  for (const auto& t : terms_) sum += t.coefficient * piece(t.exponent);
  sum += -c_reject_ * piece(0.0);
  return std::max(0.0, sum.value());
}

double DecisionFloor::at(double exposure) const { return base_ + excess(exposure); }

OptimumReport optimize_type1(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior,
                             const GridSpec& grid) {
  costs.validate();
  prior.validate();
  grid.validate();
  const double accept_risk = g.expectation(prior);
  ScanState state;
  state.best = {0, 0, 0.0, 0.0, costs.c_reject};
  if (improves(accept_risk, state.best.risk)) state.best = {0, 0, 0.0, kAlwaysAccept, accept_risk};

  const DecisionFloor floor(costs, g, prior);
  const double unit = costs.c_sample - costs.salvage;
  require_sample_bound(unit, grid);
  const ZetaGridPowers powers = grid_powers(grid, g, prior);
  const SearchBounds initial = bounds_type1(costs, g, prior, state.best.risk, grid.alpha, grid.zeta_cap);
  const double tau_max = std::min(initial.tau_max, tau_alpha(prior, grid.alpha));
  const int n_tau = tau_points(tau_max, grid, state);

  state.no_sampling_risk = state.best.risk;
  for (int n = 1;; ++n) {
    // n (Cs - rs) + E[min(g, Cr)] bounds every plan of this size and larger.
    if (n * unit + floor.base() > state.best.risk + kPruneSlack) break;
    if (grid.max_n > 0 && n > grid.max_n) break;
    const double cut = state.cutoff(grid.runner_up_count);
    if (n > kStabilityCap &&
        skip_size(n, size_floor_type1(n, n_tau, unit, costs, g, floor, grid, prior), state.best.risk, cut))
      continue;
    check_stability_cap(n);
    ScanEntry pair{n, 0, 0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (int k = 1; k <= n_tau; ++k) {
      const double tau = grid.tau_at(k);
      const Type1RiskEvaluator eval(n, tau, costs, g, prior);
      if (eval.fixed_part() + floor.base() > cut + kPruneSlack) break;
      if (eval.fixed_part() + floor.at(n * tau) > cut + kPruneSlack) continue;
      const ScanEntry cell = scan_zeta(eval, n, 0, tau, powers, grid, cut, state);
      if (improves(cell.risk, pair.risk)) pair = cell;
    }
    if (std::isfinite(pair.risk)) state.pair_minima.push_back(pair);
  }

  OptimumReport report;
  report.plan = Type1Plan{state.best.n, state.best.tau, state.best.zeta};
  report.risk = state.best.risk;
  report.bounds = bounds_type1(costs, g, prior, state.best.risk, grid.alpha, grid.zeta_cap);
  report.bounds.tau_max = tau_max;
  if (grid.max_n > 0) report.bounds.n_max = std::min(report.bounds.n_max, grid.max_n);
  report.tau_on_boundary = state.best.n > 0 && state.best.tau == grid.tau_at(n_tau);
  report.tau_truncated = state.truncated;
  report.evaluations = state.evaluations;
  report.runner_ups = std::move(state.pair_minima);
  keep_runner_ups(report.runner_ups, state.best, state.no_sampling_risk, grid.runner_up_count);
  report.scan_log = std::move(state.log);
  return report;
}

OptimumReport optimize_hybrid(const CostModel& costs, const AcceptanceCost& g, const GammaPrior& prior,
                              const GridSpec& grid) {
  costs.validate();
  prior.validate();
  grid.validate();
  const double accept_risk = g.expectation(prior);
  ScanState state;
  state.best = {0, 0, 0.0, 0.0, costs.c_reject};
  if (improves(accept_risk, state.best.risk)) state.best = {0, 0, 0.0, kAlwaysAccept, accept_risk};

  const DecisionFloor floor(costs, g, prior);
  const double unit = costs.c_sample - costs.salvage;
  require_sample_bound(unit, grid);
  const ZetaGridPowers powers = grid_powers(grid, g, prior);
  const double tau_max = tau_alpha(prior, grid.alpha);
  const int n_tau = tau_points(tau_max, grid, state);

  state.no_sampling_risk = state.best.risk;
  for (int n = 1;; ++n) {
    if (n * unit + floor.base() > state.best.risk + kPruneSlack) break;
    if (grid.max_n > 0 && n > grid.max_n) break;
    if (n > kStabilityCap && skip_size(n, size_floor_hybrid(n, n_tau, unit, costs, g, floor, grid, prior),
                                       state.best.risk, state.cutoff(grid.runner_up_count)))
      continue;
    check_stability_cap(n);
    for (int r = 1; r <= n; ++r) {
      const double cut = state.cutoff(grid.runner_up_count);
      ScanEntry pair{n, r, 0.0, 0.0, std::numeric_limits<double>::infinity()};
      bool first = true;
      bool stop_r = false;
      for (int k = 1; k <= n_tau; ++k) {
        const double tau = grid.tau_at(k);
        const HybridRiskEvaluator eval(n, r, tau, costs, g, prior);
        if (eval.fixed_part() + floor.base() > cut + kPruneSlack) {
          // The zeta-free costs grow with r as well as tau.
          stop_r = first;
          break;
        }
        first = false;
        if (eval.fixed_part() + floor.at(n * tau) > cut + kPruneSlack) continue;
        const ScanEntry cell = scan_zeta(eval, n, r, tau, powers, grid, cut, state);
        if (improves(cell.risk, pair.risk)) pair = cell;
      }
      if (std::isfinite(pair.risk)) state.pair_minima.push_back(pair);
      if (stop_r) break;
    }
  }

  OptimumReport report;
  report.plan = HybridPlan{state.best.n, state.best.r, state.best.tau, state.best.zeta};
  report.risk = state.best.risk;
  report.bounds = bounds_hybrid(costs, g, prior, state.best.risk, grid.alpha, grid.zeta_cap);
  if (grid.max_n > 0) report.bounds.n_max = std::min(report.bounds.n_max, grid.max_n);
  report.tau_on_boundary = state.best.n > 0 && state.best.tau == grid.tau_at(n_tau);
  report.tau_truncated = state.truncated;
  report.evaluations = state.evaluations;
  report.runner_ups = std::move(state.pair_minima);
  keep_runner_ups(report.runner_ups, state.best, state.no_sampling_risk, grid.runner_up_count);
  report.scan_log = std::move(state.log);
  return report;
}

}  // namespace dsplan
