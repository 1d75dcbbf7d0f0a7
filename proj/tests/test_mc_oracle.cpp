#include <doctest.h>

#include <cmath>

#include "dsplan/errors.hpp"
#include "dsplan/mc_oracle.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"

using namespace dsplan;

namespace {

const GammaPrior kPrior{2.5, 0.8};
const CostModel kCosts{0.5, 0.5, 30, 0};
const AcceptanceCost kQuad = AcceptanceCost::quadratic(2, 2, 2);

MCConfig config(std::int64_t trials, int workers = 1, std::int64_t batch = 65'536) {
  MCConfig mc;
  mc.trials = trials;
  mc.workers = workers;
  mc.batch = batch;
  return mc;
}

bool same(const MCEstimate& x, const MCEstimate& y) {
  return x.mean == y.mean && x.std_error == y.std_error && x.trials == y.trials;
}

}  // namespace

TEST_CASE("counter stream is a pure function of seed, id and draw") {
  CounterStream a(7, 3);
  CounterStream b(7, 3);
  CounterStream c(7, 4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  CHECK(a.draws() == 10);
  CounterStream u(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("uniform mean and standard error") {
  const auto est = run_trials(config(200'000), TrialFn<1>([](CounterStream& s) { return std::array<double, 1>{s.uniform()}; }))[0];
  CHECK(est.trials == 200'000);
  CHECK(std::abs(est.mean - 0.5) < 4 * est.std_error);
  CHECK(est.std_error == doctest::Approx(std::sqrt(1.0 / 12.0 / 200'000)).epsilon(0.01));
}

TEST_CASE("constant trials have zero error") {
  const auto est = run_trials(config(1000, 1, 7), TrialFn<2>([](CounterStream&) { return std::array<double, 2>{3.0, -1.5}; }));
  CHECK(est[0].mean == 3.0);
  CHECK(est[0].std_error == 0.0);
  CHECK(est[1].mean == -1.5);
}

TEST_CASE("results do not depend on workers or the trial order") {
  const Plan plan = HybridPlan{5, 3, 0.6, 1.5};
  const MCEstimate one = simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(30'000, 1));
  CHECK(same(one, simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(30'000, 1))));
  CHECK(same(one, simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(30'000, 3))));
  CHECK(same(one, simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(30'000, 4))));
  MCConfig other = config(30'000);
  other.seed += 1;
  CHECK(simulate_dsp_risk(plan, kCosts, kQuad, kPrior, other).mean != one.mean);
}

TEST_CASE("standard error shrinks like one over root n") {
  const Plan plan = Type1Plan{3, 0.725, 2.975};
  const MCEstimate small = simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(25'000));
  const MCEstimate large = simulate_dsp_risk(plan, kCosts, kQuad, kPrior, config(100'000));
  CHECK(small.std_error / large.std_error == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("prior draws have the prior moments") {
  const GammaPrior p{3.0, 1.5};
  const auto est = run_trials(config(200'000), TrialFn<2>([&](CounterStream& s) {
                                const double l = draw_rate(p, s);
                                return std::array<double, 2>{l, l * l};
                              }));
  CHECK(std::abs(est[0].mean - 2.0) < 4 * est[0].std_error);
  CHECK(std::abs(est[1].mean - 16.0 / 3.0) < 4 * est[1].std_error);
}

TEST_CASE("simulated risks agree with the closed forms") {
  const MCConfig mc = config(200'000);
  {
    const Plan plan = Type1Plan{3, 0.725, 2.975};
    const MCEstimate est = simulate_dsp_risk(plan, kCosts, kQuad, kPrior, mc);
    CHECK(std::abs(est.mean - bayes_risk_type1(std::get<Type1Plan>(plan), kCosts, kQuad, kPrior).total) < 4 * est.std_error);
  }
  {
    const CostModel costs{0.5, 0.5, 30, 0.3};
    const HybridPlan plan{6, 3, 1.3125, 1.025};
    const MCEstimate est = simulate_dsp_risk(plan, costs, kQuad, kPrior, mc);
    CHECK(std::abs(est.mean - bayes_risk_hybrid(plan, costs, kQuad, kPrior).total) < 4 * est.std_error);
  }
}

TEST_CASE("simulated moments agree with the closed forms") {
  const auto [m, t] = simulate_moments(HybridScheme{6, 3, 1.3}, kPrior, config(200'000));
  CHECK(std::abs(m.mean - expected_failures_hybrid(6, 3, 1.3, kPrior)) < 4 * m.std_error);
  CHECK(std::abs(t.mean - expected_duration_hybrid(6, 3, 1.3, kPrior)) < 4 * t.std_error);
  const auto [m1, t1] = simulate_moments(Type1Scheme{4, 0.9}, kPrior, config(200'000));
  CHECK(std::abs(m1.mean - expected_failures_type1(4, 0.9, kPrior)) < 4 * m1.std_error);
  CHECK(t1.mean == doctest::Approx(0.9));
}

TEST_CASE("configuration is validated") {
  CHECK_THROWS_AS(config(0).validate(), ValidationError);
  CHECK_THROWS_AS(config(10, 1, 0).validate(), ValidationError);
  CHECK_THROWS_AS(config(10, -1).validate(), ValidationError);
}
