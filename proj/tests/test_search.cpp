#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "dsplan/errors.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"
#include "dsplan/search.hpp"

using namespace dsplan;

namespace {

const GammaPrior kPrior{2.5, 0.8};
const AcceptanceCost kQuad = AcceptanceCost::quadratic(2, 2, 2);

GridSpec coarse(double step) {
  GridSpec g;
  g.zeta_step = step;
  g.tau_step = step;
  return g;
}

struct Best {
  int n = 0;
  int r = 0;
  double tau = 0;
  double zeta = 0;
  double risk = std::numeric_limits<double>::infinity();
};

void offer(Best& b, int n, int r, double tau, double zeta, double risk) {
  if (std::isinf(b.risk) ? risk < b.risk : risk < b.risk - 1e-12 * std::max(1.0, b.risk)) b = {n, r, tau, zeta, risk};
}

}  // namespace

TEST_CASE("tau_alpha is the marginal survival quantile") {
  for (const GammaPrior p : {kPrior, GammaPrior{1.5, 0.8}, GammaPrior{10, 3}}) {
    for (double alpha : {0.01, 0.1, 0.5}) {
      const double t = tau_alpha(p, alpha);
      CHECK(std::pow(p.rate / (p.rate + t), p.shape) == doctest::Approx(alpha).epsilon(1e-12));
    }
  }
}

TEST_CASE("Type-I optimizer equals an exhaustive scan on a coarse grid") {
  const CostModel costs{0.5, 0.5, 30, 0};
  const GridSpec grid = coarse(0.05);
  const OptimumReport rep = optimize_type1(costs, kQuad, kPrior, grid);
  Best b;
  offer(b, 0, 0, 0, 0, costs.c_reject);
  offer(b, 0, 0, 0, kAlwaysAccept, kQuad.expectation(kPrior));
  const int n_tau = static_cast<int>(std::floor(rep.bounds.tau_max / grid.tau_step + 1e-9));
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n_tau; ++k) {
      const Type1RiskEvaluator eval(n, grid.tau_at(k), costs, kQuad, kPrior);
      for (int z = 1; z <= grid.zeta_points(); ++z) offer(b, n, 0, grid.tau_at(k), grid.zeta_at(z), eval.risk(grid.zeta_at(z)));
    }
  }
  const auto& plan = std::get<Type1Plan>(rep.plan);
  CHECK(plan.n == b.n);
  CHECK(plan.tau == doctest::Approx(b.tau));
  CHECK(plan.zeta == doctest::Approx(b.zeta));
  CHECK(rep.risk == doctest::Approx(b.risk).epsilon(1e-12));
}

TEST_CASE("hybrid optimizer equals an exhaustive scan on a coarse grid") {
  const CostModel costs{0.5, 5.0, 30, 0.3};
  const GridSpec grid = coarse(0.1);
  const OptimumReport rep = optimize_hybrid(costs, kQuad, kPrior, grid);
  Best b;
  offer(b, 0, 0, 0, 0, costs.c_reject);
  const int n_tau = static_cast<int>(std::floor(rep.bounds.tau_max / grid.tau_step + 1e-9));
  for (int n = 1; n <= 9; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int k = 1; k <= n_tau; ++k) {
        const HybridRiskEvaluator eval(n, r, grid.tau_at(k), costs, kQuad, kPrior);
        for (int z = 1; z <= grid.zeta_points(); ++z) offer(b, n, r, grid.tau_at(k), grid.zeta_at(z), eval.risk(grid.zeta_at(z)));
      }
    }
  }
  const auto& plan = std::get<HybridPlan>(rep.plan);
  CHECK(plan.n == b.n);
  CHECK(plan.r == b.r);
  CHECK(plan.tau == doctest::Approx(b.tau));
  CHECK(plan.zeta == doctest::Approx(b.zeta));
  CHECK(rep.risk == doctest::Approx(b.risk).epsilon(1e-12));
}

TEST_CASE("published Type-I optimum and its report") {
  const CostModel costs{0.5, 0.5, 30, 0};
  const OptimumReport rep = optimize_type1(costs, kQuad, kPrior);
  const auto& plan = std::get<Type1Plan>(rep.plan);
  CHECK(plan.n == 3);
  CHECK(plan.tau == doctest::Approx(0.725));
  CHECK(plan.zeta == doctest::Approx(2.975));
  CHECK(std::abs(rep.risk - 25.2777) < 5e-5);
  CHECK_FALSE(rep.tau_on_boundary);
  CHECK_FALSE(rep.tau_truncated);
  CHECK(rep.bounds.zeta_max == 6.0);
  CHECK(rep.evaluations > 0);

  REQUIRE(rep.runner_ups.size() == 5);
  std::set<int> sizes;
  double prev = rep.risk;
  for (const ScanEntry& e : rep.runner_ups) {
    CHECK(e.risk >= prev);
    CHECK(e.n != 3);
    sizes.insert(e.n);
    prev = e.risk;
    // Each runner-up is the exact minimum of its size.
    const GridSpec grid;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; grid.tau_at(k) <= rep.bounds.tau_max + 1e-12; ++k) {
      const Type1RiskEvaluator eval(e.n, grid.tau_at(k), costs, kQuad, kPrior);
      for (int z = 1; z <= grid.zeta_points(); z += 1) best = std::min(best, eval.risk(grid.zeta_at(z)));
    }
    CHECK(e.risk == doctest::Approx(best).epsilon(1e-12));
  }
  CHECK(sizes.size() == rep.runner_ups.size());
}

TEST_CASE("scan log holds the per-cell minima") {
  GridSpec grid = coarse(0.1);
  grid.keep_scan_log = true;
  const CostModel costs{0.5, 0.5, 30, 0};
  const OptimumReport rep = optimize_type1(costs, kQuad, kPrior, grid);
  REQUIRE_FALSE(rep.scan_log.empty());
  double lowest = std::numeric_limits<double>::infinity();
  for (const ScanEntry& e : rep.scan_log) lowest = std::min(lowest, e.risk);
  CHECK(lowest == doctest::Approx(rep.risk).epsilon(1e-12));
  const ScanEntry& e = rep.scan_log.front();
  const Type1RiskEvaluator eval(e.n, e.tau, costs, kQuad, kPrior);
  CHECK(eval.risk(e.zeta) == doctest::Approx(e.risk).epsilon(1e-12));
}

TEST_CASE("decision floor bounds every threshold") {
  const CostModel costs{0.5, 5.0, 30, 0.3};
  const DecisionFloor floor(costs, kQuad, kPrior);
  CHECK(floor.base() <= std::min(costs.c_reject, kQuad.expectation(kPrior)));
  for (int n : {1, 3, 6}) {
    for (double tau : {0.05, 0.3, 1.2}) {
      const Type1RiskEvaluator t1(n, tau, costs, kQuad, kPrior);
      const HybridRiskEvaluator hy(n, std::max(1, n / 2), tau, costs, kQuad, kPrior);
      for (int z = 1; z <= 480; z += 5) {
        const double zeta = z * 0.0125;
        CHECK(t1.fixed_part() + floor.at(n * tau) <= t1.risk(zeta) + 1e-9);
        CHECK(hy.fixed_part() + floor.at(n * tau) <= hy.risk(zeta) + 1e-9);
      }
    }
  }
}

TEST_CASE("degenerate costs") {
  // Free rejection: reject without sampling.
  const OptimumReport rep = optimize_type1({0.5, 0.5, 0, 0}, kQuad, kPrior);
  CHECK(std::get<Type1Plan>(rep.plan).n == 0);
  CHECK(std::get<Type1Plan>(rep.plan).zeta == 0.0);
  CHECK(rep.risk == 0.0);
  // Cheap acceptance: accept without sampling.
  const OptimumReport acc = optimize_hybrid({0.5, 0.5, 30, 0}, AcceptanceCost({{1, 0}}), kPrior);
  CHECK(std::get<HybridPlan>(acc.plan).n == 0);
  CHECK(std::isinf(std::get<HybridPlan>(acc.plan).zeta));
  CHECK(acc.risk == 1.0);
}

TEST_CASE("sample size limits") {
  // No marginal sampling cost: the size is unbounded without a cap.
  CHECK_THROWS_AS(optimize_hybrid({0.3, 5, 30, 0.3}, kQuad, kPrior), ValidationError);
  GridSpec capped;
  capped.max_n = 10;
  const OptimumReport rep = optimize_hybrid({0.3, 5, 30, 0.3}, kQuad, kPrior, capped);
  CHECK(std::get<HybridPlan>(rep.plan).n <= 10);
  CHECK(rep.bounds.n_max == 10);
  // Sampling so cheap that the optimum lies beyond the stability cap.
  CHECK_THROWS_AS(optimize_type1({0.01, 0.0, 30, 0}, kQuad, kPrior, coarse(0.1)), StabilityError);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.zeta_step = 0;
  CHECK_THROWS_AS(g.validate(), ValidationError);
  g = GridSpec{};
  g.alpha = 1.0;
  CHECK_THROWS_AS(g.validate(), ValidationError);
  g = GridSpec{};
  CHECK(g.zeta_points() == 480);
  CHECK(g.zeta_at(238) == doctest::Approx(2.975));
}
