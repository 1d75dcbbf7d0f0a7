// Acceptance checks: prints one PASS/FAIL line per criterion, followed by
// indented detail lines. Exits nonzero on any failure not listed as a known
// deviation.
//
// usage: acceptance <path to dsplan binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "dsplan/bsp_ref.hpp"
#include "dsplan/mc_oracle.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"
#include "dsplan/search.hpp"
#include "dsplan/specfun.hpp"
#include "published_tables.hpp"

using namespace dsplan;
using namespace dsplan::cli;

namespace {

struct Criterion {
  Criterion(int id, std::string title) : id(id), title(std::move(title)) {}

  int id;
  std::string title;
  bool pass = true;
  int unexplained = 0;
  std::vector<std::string> details;

  void note(bool ok, const std::string& text, const char* known = nullptr) {
    pass = pass && ok;
    if (ok) {
      details.push_back("ok   " + text);
    } else if (known) {
      details.push_back("FAIL " + text + " [known: " + known + "]");
    } else {
      ++unexplained;
      details.push_back("FAIL " + text);
    }
  }
};

// Published rows that the exact risk cannot reproduce, with the reason.
struct KnownDeviation {
  const char* label;
  const char* reason;
};

const KnownDeviation kKnownDeviations[] = {
    {"T2-type1 Cs=2",
     "any zeta <= 1/(n tau) accepts iff no failure and has risk 27.95352, below the published plan's 27.95428"},
    {"T2-hybrid Ctau=0",
     "with r = n and Ctau = 0 the hybrid risk equals the Type-I risk; the published plan evaluates to 24.67409, "
     "not 24.6754"},
};

const char* known_deviation(const std::string& label) {
  for (const auto& k : kKnownDeviations)
    if (label == k.label) return k.reason;
  return nullptr;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string plan_text(const Plan& plan) {
  std::ostringstream s;
  s.precision(10);
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HybridPlan>)
          s << "(" << p.n << "," << p.r << "," << p.tau << "," << p.zeta << ")";
        else
          s << "(" << p.n << "," << p.tau << "," << p.zeta << ")";
      },
      plan);
  return s.str();
}

bool same_plan(const Plan& a, const Plan& b) {
  auto close = [](double x, double y) { return std::abs(x - y) < 1e-9; };
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<HybridPlan>(&a)) {
    const auto& q = std::get<HybridPlan>(b);
    return p->n == q.n && p->r == q.r && close(p->tau, q.tau) && close(p->zeta, q.zeta);
  }
  const auto& p = std::get<Type1Plan>(a);
  const auto& q = std::get<Type1Plan>(b);
  return p.n == q.n && close(p.tau, q.tau) && close(p.zeta, q.zeta);
}

struct RowRun {
  RunConfig config;
  OptimumReport report;
  double seconds;
};

// Every optimization goes through here so the bound checks see all of them.
std::vector<std::pair<std::string, RowRun>> g_runs;

const RowRun& optimize_row(const PublishedTable& table, const PublishedRow& row) {
  RowRun run{config_for_row(table, row, default_config()), {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  run.report = run_optimizer(run.config);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  g_runs.emplace_back(table.id + " " + describe(row.overrides), std::move(run));
  return g_runs.back().second;
}

const PublishedRow* find_row(const PublishedTable& table, double a, double b) {
  for (const auto& row : table.rows) {
    double ra = table.setting.prior.shape;
    double rb = table.setting.prior.rate;
    for (const auto& o : row.overrides) {
      if (o.name == "a") ra = o.value;
      if (o.name == "b") rb = o.value;
    }
    if (ra == a && rb == b && row.overrides.size() == 2) return &row;
  }
  return nullptr;
}

// Checks a whole table: risk within tol for every row, plans exact when asked.
void check_table(Criterion& c, const std::string& id, double tol, bool plans) {
  const PublishedTable& table = *find_table(id);
  for (const auto& row : table.rows) {
    const RowRun& run = optimize_row(table, row);
    const double diff = std::abs(run.report.risk - row.risk);
    std::string text = id + " " + describe(row.overrides) + ": risk " + fmt("%.4f", run.report.risk) + " vs " +
                       fmt("%.4f", row.risk) + ", plan " + plan_text(run.report.plan) + fmt(", %.2f s", run.seconds);
    bool ok = diff <= tol;
    if (plans) {
      const bool plan_ok = same_plan(run.report.plan, published_plan(table, row));
      if (!plan_ok) text += " (published " + plan_text(published_plan(table, row)) + ")";
      ok = ok && plan_ok;
    }
    c.note(ok, text, known_deviation(id + " " + describe(row.overrides)));
  }
}

void check_single(Criterion& c, const std::string& id, double a, double b, double tol) {
  const PublishedTable& table = *find_table(id);
  const PublishedRow* row = find_row(table, a, b);
  if (!row) {
    c.note(false, id + ": row not found");
    return;
  }
  const RowRun& run = optimize_row(table, *row);
  const Plan want = published_plan(table, *row);
  c.note(std::abs(run.report.risk - row->risk) <= tol && same_plan(run.report.plan, want),
         id + " " + describe(row->overrides) + ": risk " + fmt("%.4f", run.report.risk) + " vs " +
             fmt("%.4f", row->risk) + ", plan " + plan_text(run.report.plan) + " vs " + plan_text(want) +
             fmt(", %.2f s", run.seconds));
}

Criterion criterion1() {
  Criterion c{1, "Type-I panel of the DSP/BSP table: plans exact, risks within 5e-4"};
  check_table(c, "T2-type1", 5e-4, true);
  return c;
}

Criterion criterion2() {
  Criterion c{2, "hybrid panel: standard plan exact, every risk within 1e-3"};
  const PublishedTable& table = *find_table("T2-hybrid");
  const PublishedRow& standard = *find_row(table, 2.5, 0.8);
  for (const auto& row : table.rows) {
    const RowRun& run = optimize_row(table, row);
    std::string text = "T2-hybrid " + describe(row.overrides) + (row.max_n ? " max_n=" + std::to_string(row.max_n) : "") +
                       ": risk " + fmt("%.4f", run.report.risk) + " vs " + fmt("%.4f", row.risk) + ", plan " +
                       plan_text(run.report.plan) + fmt(", %.2f s", run.seconds);
    bool ok = std::abs(run.report.risk - row.risk) <= 1e-3;
    if (&row == &standard) ok = ok && same_plan(run.report.plan, published_plan(table, row));
    c.note(ok, text, known_deviation("T2-hybrid " + describe(row.overrides)));
  }
  return c;
}

Criterion criterion3() {
  Criterion c{3, "zero time cost table: risks within 5e-3"};
  check_table(c, "T1", 5e-3, false);
  return c;
}

Criterion criterion4() {
  Criterion c{4, "fifth-degree loss: hybrid and Type-I rows at (1.5, 0.8)"};
  check_single(c, "T3", 1.5, 0.8, 1e-3);
  check_single(c, "T8", 1.5, 0.8, 1e-3);
  return c;
}

Criterion criterion5() {
  Criterion c{5, "fractional-power loss: hybrid and Type-I rows at (2.5, 0.8)"};
  check_single(c, "T12", 2.5, 0.8, 1e-3);
  check_single(c, "T17", 2.5, 0.8, 1e-3);
  return c;
}

// Type-I E(M) as the prior average of the binomial failure-count law.
double failures_double_sum(int n, double tau, const GammaPrior& p) {
  specfun::CompensatedSum s;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      const double v = k * std::exp(specfun::log_binomial(n, k) + specfun::log_binomial(k, j) +
                                    p.shape * std::log(p.rate / (p.rate + (n - k + j) * tau)));
      s += j % 2 == 0 ? v : -v;
    }
  }
  return s.value();
}

Criterion criterion6() {
  Criterion c{6, "closed forms agree with simulation on 50 random plans per scheme"};
  std::mt19937_64 rng(20241016);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> tau_dist(0.05, 2.0);
  std::uniform_real_distribution<double> zeta_dist(0.2, 5.0);
  const GammaPrior prior{2.5, 0.8};
  const AcceptanceCost g = AcceptanceCost::quadratic(2, 2, 2);
  const CostModel type1_costs{0.5, 0.5, 30, 0};
  const CostModel hybrid_costs{0.5, 5.0, 30, 0.3};
  MCConfig mc;
  mc.trials = 1'000'000;

  int risk_fail = 0;
  int em_fail = 0;
  int moment_fail = 0;
  double worst_em = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Type1Plan plan{size(rng), tau_dist(rng), zeta_dist(rng)};
    mc.seed = 1000 + i;
    const double closed = bayes_risk_type1(plan, type1_costs, g, prior).total;
    const MCEstimate est = simulate_dsp_risk(plan, type1_costs, g, prior, mc);
    const double z = (est.mean - closed) / est.std_error;
    if (std::abs(z) > 3) {
      ++risk_fail;
      c.details.push_back("     type1 " + plan_text(plan) + fmt(": risk z-score %.2f", z));
    }
    const double direct = plan.n * -std::expm1(prior.shape * std::log(prior.rate / (prior.rate + plan.tau)));
    const double err = std::max(std::abs(failures_double_sum(plan.n, plan.tau, prior) - direct),
                                std::abs(expected_failures_type1(plan.n, plan.tau, prior) - direct));
    worst_em = std::max(worst_em, err);
    if (err > 1e-9) ++em_fail;
  }
  for (int i = 0; i < 50; ++i) {
    const int n = size(rng);
    const HybridPlan plan{n, std::uniform_int_distribution<int>(1, n)(rng), tau_dist(rng), zeta_dist(rng)};
    mc.seed = 2000 + i;
    const double closed = bayes_risk_hybrid(plan, hybrid_costs, g, prior).total;
    const MCEstimate est = simulate_dsp_risk(plan, hybrid_costs, g, prior, mc);
    const double z = (est.mean - closed) / est.std_error;
    if (std::abs(z) > 3) {
      ++risk_fail;
      c.details.push_back("     hybrid " + plan_text(plan) + fmt(": risk z-score %.2f", z));
    }
    const auto [m, t] = simulate_moments(HybridScheme{plan.n, plan.r, plan.tau}, prior, mc);
    const double zm = (m.mean - expected_failures_hybrid(plan.n, plan.r, plan.tau, prior)) / m.std_error;
    const double zt = (t.mean - expected_duration_hybrid(plan.n, plan.r, plan.tau, prior)) / t.std_error;
    if (std::abs(zm) > 3 || std::abs(zt) > 3) {
      ++moment_fail;
      c.details.push_back("     hybrid " + plan_text(plan) + fmt(": E(M) z %.2f", zm) + fmt(", E(tau*) z %.2f", zt));
    }
  }
  c.note(risk_fail == 0, std::to_string(risk_fail) + " of 100 plan risks outside 3 se at 1e6 trials");
  c.note(em_fail == 0, std::to_string(em_fail) + " of 50 Type-I E(M) identities off by more than 1e-9 (worst " +
                           fmt("%.2e", worst_em) + ")");
  c.note(moment_fail == 0, std::to_string(moment_fail) + " of 50 hybrid E(M)/E(tau*) pairs outside 3 se");
  return c;
}

Criterion criterion7() {
  Criterion c{7, "bound theorems hold on every optimization run"};
  int literal_fail = 0;
  for (const auto& [label, run] : g_runs) {
    const auto violations = bound_violations(run.config, run.report);
    for (const auto& v : violations) c.note(false, label + ": " + v);
    const auto [n, tau] =
        std::visit([](const auto& p) { return std::pair<int, double>{p.n, p.tau}; }, run.report.plan);
    const double literal = n * (run.config.costs.c_sample - run.config.costs.salvage) + tau * run.config.costs.c_time;
    if (literal > run.report.risk + 1e-9) {
      ++literal_fail;
      c.note(false, label + fmt(": n(Cs-rs) + tau Ctau = %.6f exceeds the risk", literal));
    }
  }
  c.note(true, std::to_string(g_runs.size()) + " optimizations checked (risk <= min(Cr, E g), cost floor, r <= n, "
                                               "re-evaluated risk)");
  c.note(literal_fail == 0, std::to_string(literal_fail) + " violations of n(Cs-rs) + tau Ctau <= risk");
  return c;
}

Criterion criterion8() {
  Criterion c{8, "Bayes rule risk within 0.05 of the DSP risk; quadratic cutoff matches the root"};
  MCConfig mc;
  mc.trials = 1'000'000;
  for (const char* id : {"T2-type1", "T2-hybrid"}) {
    for (const auto& [label, run] : g_runs) {
      if (label.rfind(std::string(id) + " ", 0) != 0) continue;
      const MCEstimate bsp = bsp_bayes_risk_mc(scheme_of(run.report.plan), run.config.costs, run.config.acceptance,
                                               run.config.prior, mc);
      const double gap = run.report.risk - bsp.mean;
      c.note(std::abs(gap) <= 0.05, label + ": DSP " + fmt("%.4f", run.report.risk) + ", Bayes rule " +
                                        fmt("%.4f", bsp.mean) + fmt(" +- %.4f", bsp.std_error));
    }
  }
  double worst = 0.0;
  const GammaPrior prior{2.5, 0.8};
  const CostModel costs{0.5, 0.5, 30, 0};
  for (const auto& [a0, a1, a2] : {std::array<double, 3>{2, 2, 2}, {0.5, 1, 3}, {5, 0.2, 1}}) {
    const AcceptanceCost g = AcceptanceCost::quadratic(a0, a1, a2);
    for (int m = 0; m <= 10; ++m) {
      const double alpha = prior.shape + m;
      const double k = costs.c_reject - a0;
      const double y = (a1 * alpha + std::sqrt(a1 * a1 * alpha * alpha + 4 * k * a2 * alpha * (alpha + 1))) / (2 * k);
      const BayesDecisionThreshold t = bsp_threshold(m, 10, 1e3, costs, g, prior);
      worst = std::max(worst, std::abs(t.root - y) / y);
    }
  }
  c.note(worst <= 1e-8, fmt("quadratic root: worst relative error %.2e over 33 cases", worst));
  return c;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Criterion criterion9(const std::string& binary) {
  Criterion c{9, "repeated reproduce T2-type1 runs are byte-identical"};
  const std::string command = "'" + binary + "' reproduce T2-type1 --mc --quick --seed 7";
  int s1 = 0;
  int s2 = 0;
  const std::string first = capture(command, s1);
  const std::string second = capture(command, s2);
  c.note(s1 == 0 && s2 == 0, "exit statuses " + std::to_string(s1) + ", " + std::to_string(s2));
  c.note(!first.empty() && first == second, std::to_string(first.size()) + " bytes, identical: " +
                                                (first == second ? "yes" : "no"));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <dsplan binary>\n";
    return 2;
  }
  std::vector<Criterion> results;
  auto report = [&](Criterion c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const auto& d : c.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    results.push_back(std::move(c));
  };
  report(criterion1());
  report(criterion2());
  report(criterion3());
  report(criterion4());
  report(criterion5());
  report(criterion6());
  report(criterion7());
  report(criterion8());
  report(criterion9(argv[1]));

  int failed = 0;
  int unexplained = 0;
  std::cout << "\nsummary\n";
  for (const auto& c : results) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id;
    if (!c.pass && c.unexplained == 0) std::cout << " (known deviations only)";
    std::cout << '\n';
    failed += c.pass ? 0 : 1;
    unexplained += c.unexplained;
  }
  std::cout << results.size() << " criteria, " << failed << " failed, " << unexplained << " unexplained failures\n";
  return unexplained == 0 ? 0 : 1;
}
