#include <doctest.h>

#include <cmath>
#include <limits>

#include "dsplan/bsp_ref.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"

using namespace dsplan;

namespace {

const GammaPrior kPrior{2.5, 0.8};
const CostModel kCosts{0.5, 0.5, 30, 0};

double quadratic_root(double a0, double a1, double a2, double cr, double alpha) {
  const double c = cr - a0;
  return (a1 * alpha + std::sqrt(a1 * a1 * alpha * alpha + 4 * c * a2 * alpha * (alpha + 1))) / (2 * c);
}

}  // namespace

TEST_CASE("posterior cost under quadratic loss") {
  const AcceptanceCost g = AcceptanceCost::quadratic(1, 2, 3);
  for (int m = 0; m <= 4; ++m) {
    for (double z : {0.0, 0.7, 3.2}) {
      const double alpha = kPrior.shape + m;
      const double beta = kPrior.rate + z;
      const double want = 1 + 2 * alpha / beta + 3 * alpha * (alpha + 1) / (beta * beta);
      CHECK(posterior_expected_cost(m, z, g, kPrior) == doctest::Approx(want).epsilon(1e-13));
    }
  }
}

TEST_CASE("threshold is the root of the quadratic") {
  for (const auto& [a0, a1, a2] : {std::array<double, 3>{2, 2, 2}, {0, 1, 5}, {10, 0.5, 0.1}}) {
    const AcceptanceCost g = AcceptanceCost::quadratic(a0, a1, a2);
    for (int m = 0; m <= 5; ++m) {
      const BayesDecisionThreshold t = bsp_threshold(m, 8, 100.0, kCosts, g, kPrior);
      const double y = quadratic_root(a0, a1, a2, kCosts.c_reject, kPrior.shape + m);
      CHECK(t.m == m);
      CHECK(t.root == doctest::Approx(y).epsilon(1e-8));
      CHECK(t.cutoff == doctest::Approx(std::max(0.0, y - kPrior.rate)).epsilon(1e-8));
    }
  }
}

TEST_CASE("decisions on either side of the cutoff") {
  const AcceptanceCost g = AcceptanceCost::quadratic(2, 2, 2);
  const BayesDecisionThreshold t = bsp_threshold(2, 8, 100.0, kCosts, g, kPrior);
  CHECK(bsp_decide(t, t.cutoff) == Decision::accept);
  CHECK(bsp_decide(t, t.cutoff * 1.01) == Decision::accept);
  CHECK(bsp_decide(t, t.cutoff * 0.99) == Decision::reject);
  CHECK(posterior_expected_cost(2, t.cutoff * 1.01, g, kPrior) < kCosts.c_reject);
  CHECK(posterior_expected_cost(2, t.cutoff * 0.99, g, kPrior) > kCosts.c_reject);
}

TEST_CASE("degenerate acceptance costs") {
  // Rejection no dearer than the cheapest acceptance: always reject.
  const BayesDecisionThreshold never = bsp_threshold(1, 4, 1.0, {0.5, 0.5, 2, 0}, AcceptanceCost::quadratic(2, 1, 1), kPrior);
  CHECK(std::isinf(never.cutoff));
  CHECK(bsp_decide(never, 1e300) == Decision::reject);
  // Constant cost below Cr: always accept.
  const BayesDecisionThreshold always = bsp_threshold(3, 4, 1.0, kCosts, AcceptanceCost({{5, 0}}), kPrior);
  CHECK(always.cutoff == 0.0);
  CHECK(bsp_decide(always, 0.0) == Decision::accept);
}

TEST_CASE("the Bayes rule is no worse than the optimal threshold rule") {
  MCConfig mc;
  mc.trials = 200'000;
  const AcceptanceCost g = AcceptanceCost::quadratic(2, 2, 2);
  {
    const Type1Plan plan{3, 0.725, 2.975};
    const MCEstimate bsp = bsp_bayes_risk_mc(Type1Scheme{3, 0.725}, kCosts, g, kPrior, mc);
    const double dsp = bayes_risk_type1(plan, kCosts, g, kPrior).total;
    CHECK(bsp.mean <= dsp + 3 * bsp.std_error);
    CHECK(bsp.mean >= dsp - 0.05 - 3 * bsp.std_error);
  }
  {
    const CostModel costs{0.5, 5.0, 30, 0.3};
    const HybridPlan plan{6, 3, 0.2, 2.975};
    const MCEstimate bsp = bsp_bayes_risk_mc(HybridScheme{6, 3, 0.2}, costs, g, kPrior, mc);
    const double dsp = bayes_risk_hybrid(plan, costs, g, kPrior).total;
    CHECK(bsp.mean <= dsp + 3 * bsp.std_error);
    CHECK(bsp.mean >= dsp - 0.05 - 3 * bsp.std_error);
  }
}
