#include <doctest.h>

#include <cmath>

#include "dsplan/errors.hpp"
#include "dsplan/mc_oracle.hpp"
#include "dsplan/risk_type1.hpp"
#include "oracles.hpp"

using namespace dsplan;

namespace {

const GammaPrior kPrior{2.5, 0.8};
const CostModel kCosts{0.5, 0.5, 30, 0};
const AcceptanceCost kQuad = AcceptanceCost::quadratic(2, 2, 2);

double type1_risk(int n, double tau, double zeta, const CostModel& c = kCosts, const AcceptanceCost& g = kQuad,
                  const GammaPrior& p = kPrior) {
  return bayes_risk_type1({n, tau, zeta}, c, g, p).total;
}

}  // namespace

TEST_CASE("expected failures: double sum equals n(1 - (b/(b+tau))^a)") {
  for (const GammaPrior prior : {kPrior, GammaPrior{1.5, 0.8}, GammaPrior{0.2, 0.2}, GammaPrior{10, 3}}) {
    for (int n = 0; n <= 25; ++n) {
      for (double tau : {0.0, 0.0125, 0.3, 0.725, 1.7, 4.0}) {
        const double closed = n * (1.0 - std::pow(prior.rate / (prior.rate + tau), prior.shape));
        CAPTURE(n);
        CAPTURE(tau);
        CHECK(std::abs(expected_failures_type1(n, tau, prior) - closed) < 1e-9);
      }
    }
  }
}

TEST_CASE("Type-I risk of the published plan") {
  // T2-type1 standard row, (n, tau, zeta) = (3, 0.7250, 2.9750): 25.2777.
  CHECK(std::abs(type1_risk(3, 0.725, 2.975) - 25.2777) < 5e-5);
  const RiskBreakdown b = bayes_risk_type1({3, 0.725, 2.975}, kCosts, kQuad, kPrior);
  CHECK(b.sampling_term == 1.5);
  CHECK(b.salvage_term == 0.0);
  CHECK(b.time_term == doctest::Approx(0.3625));
  CHECK(b.acceptance_term == doctest::Approx(35.59375));
  CHECK(b.total == doctest::Approx(b.sampling_term + b.salvage_term + b.time_term + b.acceptance_term + b.threshold_term));
  REQUIRE(b.per_l_weights.size() == 3);
  CHECK(b.per_l_weights[0] == 28.0);
  CHECK(b.per_l_weights[1] == -2.0);
}

TEST_CASE("no-sampling plans") {
  CHECK(type1_risk(0, 0, 0) == 30.0);
  CHECK(type1_risk(0, 0, kAlwaysAccept) == doctest::Approx(35.59375).epsilon(1e-14));
  CHECK(type1_risk(0, 0, 1.0) == doctest::Approx(35.59375).epsilon(1e-14));
}

TEST_CASE("Type-I risk of published fifth-degree and fractional-power plans") {
  const double five[] = {2, 2, 2, 2, 2, 2};
  // type1-quintic-ab (1.5, 0.8): (5, 1.7000, 0.9375) -> 27.0038.
  CHECK(std::abs(type1_risk(5, 1.7, 0.9375, kCosts, AcceptanceCost::polynomial(five), {1.5, 0.8}) - 27.0038) < 5e-5);
  // type1-nonpoly-ab (2.5, 0.8): (4, 1.0750, 2.0625) -> 27.5603.
  const AcceptanceCost frac({{2, 0}, {2, 1}, {2, 2.5}});
  CHECK(std::abs(type1_risk(4, 1.075, 2.0625, kCosts, frac) - 27.5603) < 5e-5);
}

TEST_CASE("Type-I risk matches prior quadrature of the conditional tail") {
  const AcceptanceCost frac({{2, 0}, {1, 1}, {0.5, 2.5}});
  for (int n : {1, 2, 4, 7}) {
    for (double tau : {0.2, 0.725, 1.6}) {
      for (double zeta : {0.0, 0.3, 1.0, 2.975, 5.5}) {
        for (const AcceptanceCost* g : {&kQuad, &frac}) {
          const double want = oracle::risk_by_quadrature(
              n, tau, zeta, expected_failures_type1(n, tau, kPrior), tau, kCosts, *g, kPrior,
              [&](double l) { return tail_probability_type1(n, tau, zeta, l); });
          CAPTURE(n);
          CAPTURE(tau);
          CAPTURE(zeta);
          CHECK(type1_risk(n, tau, zeta, kCosts, *g) == doctest::Approx(want).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("Type-I conditional tail matches simulation") {
  MCConfig mc;
  mc.trials = 200'000;
  for (double lambda : {0.4, 1.5, 3.0}) {
    for (double zeta : {0.5, 1.5, 3.0}) {
      const Type1Plan plan{4, 0.6, zeta};
      const MCEstimate est = simulate_tail_probability(lambda, plan, mc);
      const double p = tail_probability_type1(4, 0.6, zeta, lambda);
      CAPTURE(lambda);
      CAPTURE(zeta);
      CHECK(std::abs(est.mean - p) <= 4.0 * est.std_error + 1e-12);
    }
  }
}

TEST_CASE("tail probability is monotone") {
  for (double lambda : {0.2, 1.0, 5.0}) {
    double prev = 1.0;
    for (int k = 0; k <= 480; ++k) {
      const double t = tail_probability_type1(5, 0.5, k * 0.0125, lambda);
      CHECK(t <= prev + 1e-12);
      prev = t;
    }
  }
}

TEST_CASE("appending a zero-coefficient term leaves the risk unchanged") {
  const AcceptanceCost extended({{2, 0}, {2, 1}, {2, 2}, {0, 3.5}});
  for (double zeta : {0.0, 0.9, 2.975, 6.0}) {
    CHECK(type1_risk(3, 0.725, zeta, kCosts, extended) == doctest::Approx(type1_risk(3, 0.725, zeta)).epsilon(1e-12));
  }
}

TEST_CASE("grid evaluation matches direct evaluation") {
  std::vector<double> zetas;
  for (int k = 1; k <= 480; ++k) zetas.push_back(k * 0.0125);
  const ZetaGridPowers powers(zetas, kStabilityCap, kQuad, kPrior);
  for (int n : {1, 3, 8}) {
    const Type1RiskEvaluator eval(n, 0.725, kCosts, kQuad, kPrior);
    for (std::size_t k = 0; k < zetas.size(); k += 7) {
      CHECK(eval.risk(powers, k) == doctest::Approx(eval.risk(zetas[k])).epsilon(1e-12));
    }
  }
}

TEST_CASE("stability cap") {
  CHECK_NOTHROW(type1_risk(30, 0.1, 1.0));
  CHECK_THROWS_AS(type1_risk(31, 0.1, 1.0), StabilityError);
}
