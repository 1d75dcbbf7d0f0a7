#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsplan/bsp_ref.hpp"
#include "dsplan/errors.hpp"
#include "dsplan/mc_oracle.hpp"
#include "dsplan/risk_hybrid.hpp"
#include "dsplan/risk_type1.hpp"

namespace dsplan::cli {

namespace {

constexpr std::int64_t kQuickTrials = 100'000;

std::string format(double x, std::chars_format fmt, int precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto res = precision < 0 ? std::to_chars(buf, buf + sizeof buf, x)
                                 : std::to_chars(buf, buf + sizeof buf, x, fmt, precision);
  return std::string(buf, res.ptr);
}

// Shortest round-trip text.
std::string exact(double x) { return format(x, std::chars_format::general, -1); }
// Four decimals, as printed in published tables.
std::string fixed4(double x) { return format(x, std::chars_format::fixed, 4); }
// Grid coordinates: ten significant digits hides k * step rounding noise.
std::string grid(double x) { return format(x, std::chars_format::general, 10); }

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : width_(header.size()) { line(header); }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
    line(cells);
  }
  std::string str() const { return os_.str(); }

 private:
  void line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << '\n';
  }
  std::size_t width_;
  std::ostringstream os_;
};

struct PlanCells {
  std::string scheme, n, r, tau, zeta;
};

PlanCells plan_cells(const Plan& plan) {
  return std::visit(
      [](const auto& p) -> PlanCells {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HybridPlan>) {
          return {"hybrid", std::to_string(p.n), std::to_string(p.r), grid(p.tau), grid(p.zeta)};
        } else {
          return {"type1", std::to_string(p.n), "", grid(p.tau), grid(p.zeta)};
        }
      },
      plan);
}

std::vector<std::string> breakdown_cells(const RiskBreakdown& b) {
  return {exact(b.sampling_term), exact(b.salvage_term), exact(b.time_term), exact(b.acceptance_term),
          exact(b.threshold_term)};
}

const std::vector<std::string> kBreakdownHeader = {"sampling_term", "salvage_term", "time_term",
                                                   "acceptance_term", "threshold_term"};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
  if (!f) throw ValidationError("failed writing " + path);
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

Check within(std::string name, double got, double want, double tol) {
  const double diff = std::abs(got - want);
  return {std::move(name), diff <= tol,
          "got " + exact(got) + ", want " + exact(want) + ", |diff| " + exact(diff) + " <= " + exact(tol)};
}

Check within_se(std::string name, const MCEstimate& est, double want, double sigmas) {
  const double diff = std::abs(est.mean - want);
  const double tol = sigmas * est.std_error;
  return {std::move(name), diff <= tol,
          "mc " + exact(est.mean) + " +- " + exact(est.std_error) + " vs " + exact(want) + " (" +
              std::to_string(est.trials) + " trials)"};
}

}  // namespace

RunConfig config_for_row(const PublishedTable& table, const PublishedRow& row, const RunConfig& base) {
  const TableSetting s = apply_overrides(table.setting, row.overrides);
  RunConfig c = base;
  c.hybrid = s.scheme == SchemeKind::hybrid;
  c.prior = s.prior;
  c.costs = s.costs;
  c.acceptance = AcceptanceCost(s.acceptance);
  if (row.max_n > 0) c.grid.max_n = row.max_n;
  c.plan.reset();
  c.expected_risk.reset();
  c.validate();
  return c;
}

Plan published_plan(const PublishedTable& table, const PublishedRow& row) {
  if (table.setting.scheme == SchemeKind::hybrid) return HybridPlan{row.n, row.r, row.tau, row.zeta};
  return Type1Plan{row.n, row.tau, row.zeta};
}

RiskBreakdown evaluate_plan(const RunConfig& config, const Plan& plan) {
  return std::visit(
      [&](const auto& p) -> RiskBreakdown {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HybridPlan>) {
          return bayes_risk_hybrid(p, config.costs, config.acceptance, config.prior);
        } else {
          return bayes_risk_type1(p, config.costs, config.acceptance, config.prior);
        }
      },
      plan);
}

OptimumReport run_optimizer(const RunConfig& config) {
  return config.hybrid ? optimize_hybrid(config.costs, config.acceptance, config.prior, config.grid)
                       : optimize_type1(config.costs, config.acceptance, config.prior, config.grid);
}

std::vector<std::string> bound_violations(const RunConfig& config, const OptimumReport& report) {
  constexpr double slack = 1e-9;
  std::vector<std::string> out;
  const double ceiling = std::min(config.costs.c_reject, config.acceptance.expectation(config.prior));
  if (report.risk > ceiling + slack)
    out.push_back("risk " + exact(report.risk) + " exceeds min(Cr, E g) = " + exact(ceiling));
  const auto [n, r, tau] = std::visit(
      [](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HybridPlan>) {
          return std::tuple<int, int, double>{p.n, p.r, p.tau};
        } else {
          return std::tuple<int, int, double>{p.n, 0, p.tau};
        }
      },
      report.plan);
  // Hybrid tests stop at min(X_(r), tau), so the time cost floor is E(tau*) C_tau.
  const double duration = config.hybrid && n > 0 ? expected_duration_hybrid(n, r, tau, config.prior) : tau;
  const double floor = n * (config.costs.c_sample - config.costs.salvage) + duration * config.costs.c_time;
  if (floor > report.risk + slack)
    out.push_back("sampling cost " + exact(floor) + " exceeds risk " + exact(report.risk));
  if (r > n) out.push_back("r exceeds n");
  const double again = evaluate_plan(config, report.plan).total;
  if (std::abs(again - report.risk) > 1e-9 * std::max(1.0, std::abs(again)))
    out.push_back("re-evaluated risk " + exact(again) + " differs from reported " + exact(report.risk));
  return out;
}

MCConfig effective_mc(const RunConfig& config, const CommandOptions& options) {
  MCConfig mc = config.mc;
  if (options.seed) mc.seed = *options.seed;
  if (options.quick) mc.trials = std::min(mc.trials, kQuickTrials);
  return mc;
}

int cmd_risk(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  if (!config.plan) throw ValidationError("risk: config has no plan");
  const RiskBreakdown b = evaluate_plan(config, *config.plan);
  std::vector<std::string> header = {"scheme", "n", "r", "tau", "zeta"};
  header.insert(header.end(), kBreakdownHeader.begin(), kBreakdownHeader.end());
  header.push_back("risk_exact");
  header.push_back("risk");
  if (options.mc) {
    header.push_back("mc_mean");
    header.push_back("mc_se");
  }
  Csv csv(header);
  const PlanCells p = plan_cells(*config.plan);
  std::vector<std::string> cells = {p.scheme, p.n, p.r, p.tau, p.zeta};
  for (auto& c : breakdown_cells(b)) cells.push_back(std::move(c));
  cells.push_back(exact(b.total));
  cells.push_back(fixed4(b.total));
  if (options.mc) {
    const MCEstimate est =
        simulate_dsp_risk(*config.plan, config.costs, config.acceptance, config.prior, effective_mc(config, options));
    cells.push_back(exact(est.mean));
    cells.push_back(exact(est.std_error));
  }
  csv.row(cells);
  write_output(csv.str(), config.output, out);
  return kOk;
}

int cmd_optimize(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                 std::ostream& err) {
  RunConfig c = config;
  c.grid.keep_scan_log = !options.scan_log.empty();
  const OptimumReport report = run_optimizer(c);
  const RiskBreakdown b = evaluate_plan(c, report.plan);

  std::vector<std::string> header = {"kind", "scheme", "n", "r", "tau", "zeta", "risk", "risk_exact"};
  header.insert(header.end(), kBreakdownHeader.begin(), kBreakdownHeader.end());
  for (const char* h : {"tau_on_boundary", "tau_truncated", "n_max", "tau_max", "zeta_max", "evaluations",
                        "mc_mean", "mc_se"})
    header.push_back(h);
  Csv csv(header);

  const PlanCells p = plan_cells(report.plan);
  std::vector<std::string> cells = {"optimum", p.scheme, p.n, p.r, p.tau, p.zeta, fixed4(report.risk),
                                    exact(report.risk)};
  for (auto& x : breakdown_cells(b)) cells.push_back(std::move(x));
  cells.push_back(report.tau_on_boundary ? "1" : "0");
  cells.push_back(report.tau_truncated ? "1" : "0");
  cells.push_back(std::to_string(report.bounds.n_max));
  cells.push_back(exact(report.bounds.tau_max));
  cells.push_back(exact(report.bounds.zeta_max));
  cells.push_back(std::to_string(report.evaluations));
  if (options.mc) {
    const MCEstimate est =
        simulate_dsp_risk(report.plan, c.costs, c.acceptance, c.prior, effective_mc(c, options));
    cells.push_back(exact(est.mean));
    cells.push_back(exact(est.std_error));
  } else {
    cells.push_back("");
    cells.push_back("");
  }
  csv.row(cells);
  for (const ScanEntry& e : report.runner_ups) {
    std::vector<std::string> row(header.size());
    row[0] = "runner_up";
    row[1] = p.scheme;
    row[2] = std::to_string(e.n);
    row[3] = c.hybrid ? std::to_string(e.r) : "";
    row[4] = grid(e.tau);
    row[5] = grid(e.zeta);
    row[6] = fixed4(e.risk);
    row[7] = exact(e.risk);
    csv.row(row);
  }
  write_output(csv.str(), c.output, out);

  if (!options.scan_log.empty()) {
    Csv log({"n", "r", "tau", "zeta", "risk"});
    for (const ScanEntry& e : report.scan_log)
      log.row({std::to_string(e.n), c.hybrid ? std::to_string(e.r) : "", grid(e.tau), grid(e.zeta), exact(e.risk)});
    write_output(log.str(), options.scan_log, out);
  }

  const auto violations = bound_violations(c, report);
  for (const auto& v : violations) err << "bound violated: " << v << '\n';
  return violations.empty() ? kOk : kInvariant;
}

int cmd_reproduce(const PublishedTable& table, const RunConfig& config, const CommandOptions& options,
                  std::ostream& out, std::ostream& err) {
  std::vector<std::string> header = {"table", "row", "label", "method", "source", "scheme", "n", "r",
                                     "tau", "zeta", "risk", "risk_exact"};
  header.insert(header.end(), kBreakdownHeader.begin(), kBreakdownHeader.end());
  for (const char* h : {"mc_mean", "mc_se", "tau_on_boundary"}) header.push_back(h);
  Csv csv(header);
  const MCConfig mc = effective_mc(config, options);
  int status = kOk;

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const PublishedRow& row = table.rows[i];
    const RunConfig c = config_for_row(table, row, config);
    const std::string label =
        describe(row.overrides) + (row.max_n > 0 ? " max_n=" + std::to_string(row.max_n) : "");
    const std::string index = std::to_string(i + 1);
    auto blank = [&](const std::string& method, const std::string& source) {
      std::vector<std::string> r(header.size());
      r[0] = table.id;
      r[1] = index;
      r[2] = label;
      r[3] = method;
      r[4] = source;
      r[5] = c.hybrid ? "hybrid" : "type1";
      return r;
    };

    OptimumReport report;
    try {
      report = run_optimizer(c);
    } catch (const StabilityError& e) {
      throw StabilityError(table.id + " row " + index + " (" + label + "): " + e.what());
    }
    const RiskBreakdown b = evaluate_plan(c, report.plan);
    const PlanCells p = plan_cells(report.plan);
    std::vector<std::string> computed = blank("DSP", "computed");
    computed[6] = p.n;
    computed[7] = p.r;
    computed[8] = p.tau;
    computed[9] = p.zeta;
    computed[10] = fixed4(report.risk);
    computed[11] = exact(report.risk);
    const auto parts = breakdown_cells(b);
    std::copy(parts.begin(), parts.end(), computed.begin() + 12);
    computed[19] = report.tau_on_boundary ? "1" : "0";
    csv.row(computed);

    std::vector<std::string> pub = blank("DSP", "published");
    const PlanCells pp = plan_cells(published_plan(table, row));
    pub[6] = pp.n;
    pub[7] = pp.r;
    pub[8] = pp.tau;
    pub[9] = pp.zeta;
    pub[10] = fixed4(row.risk);
    csv.row(pub);

    if (row.bsp_risk) {
      std::vector<std::string> bsp = blank("BSP", "published");
      bsp[10] = fixed4(*row.bsp_risk);
      csv.row(bsp);
    }
    if (options.mc) {
      const MCEstimate dsp = simulate_dsp_risk(report.plan, c.costs, c.acceptance, c.prior, mc);
      std::vector<std::string> sim = blank("DSP", "simulated");
      sim[6] = p.n;
      sim[7] = p.r;
      sim[8] = p.tau;
      sim[9] = p.zeta;
      sim[10] = fixed4(dsp.mean);
      sim[17] = exact(dsp.mean);
      sim[18] = exact(dsp.std_error);
      csv.row(sim);
      const MCEstimate bsp_est = bsp_bayes_risk_mc(scheme_of(report.plan), c.costs, c.acceptance, c.prior, mc);
      std::vector<std::string> bsp = blank("BSP", "simulated");
      bsp[6] = p.n;
      bsp[7] = p.r;
      bsp[8] = p.tau;
      bsp[10] = fixed4(bsp_est.mean);
      bsp[17] = exact(bsp_est.mean);
      bsp[18] = exact(bsp_est.std_error);
      csv.row(bsp);
    }
    for (const ComparisonEntry& cmp : row.comparisons) {
      std::vector<std::string> r = blank(cmp.method, "published");
      r[6] = std::to_string(cmp.n);
      r[8] = grid(cmp.tau);
      r[9] = grid(cmp.statistic);
      r[10] = fixed4(cmp.risk);
      csv.row(r);
    }
    for (const auto& v : bound_violations(c, report)) {
      err << table.id << " row " << index << ": bound violated: " << v << '\n';
      status = kInvariant;
    }
  }
  write_output(csv.str(), config.output, out);
  return status;
}

int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const MCConfig mc = effective_mc(config, options);
  std::vector<Check> checks;
  const OptimumReport report = run_optimizer(config);
  const Plan plan = config.plan ? *config.plan : report.plan;
  const Scheme scheme = scheme_of(plan);
  const auto [n, r, tau] = std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, HybridScheme>) {
          return std::tuple<int, int, double>{s.n, s.r, s.tau};
        } else {
          return std::tuple<int, int, double>{s.n, s.n, s.tau};
        }
      },
      scheme);
  const GammaPrior& prior = config.prior;
  const double cr = config.costs.c_reject;
  const double accept_all = config.acceptance.expectation(prior);

  // Expected failure count against an independent route.
  if (config.hybrid) {
    specfun::CompensatedSum s;
    double below = 0.0;
    for (int k = 0; k < r; ++k) {
      const double pk = failure_count_pmf(n, k, tau, prior);
      s += k * pk;
      below += pk;
    }
    s += r * (1.0 - below);
    checks.push_back(within("E(M) = sum k P(N=k) + r P(N>=r)", expected_failures_hybrid(n, r, tau, prior),
                            s.value(), 1e-9));
  } else {
    const double closed = n * -std::expm1(prior.shape * std::log(prior.rate / (prior.rate + tau)));
    checks.push_back(within("E(M) = n (1 - (b/(b+tau))^a)", expected_failures_type1(n, tau, prior), closed, 1e-9));
  }

  // Threshold extremes: zeta = 0 rejects every batch, a huge zeta accepts every batch.
  if (n > 0) {
    auto with_zeta = [&](double z) {
      Plan q = plan;
      std::visit([z](auto& p) { p.zeta = z; }, q);
      const RiskBreakdown b = evaluate_plan(config, q);
      return b.acceptance_term + b.threshold_term;
    };
    checks.push_back(within("zeta = 0 always rejects", with_zeta(0.0), cr, 1e-9 * std::max(1.0, cr)));
    checks.push_back(within("zeta = 1e6 always accepts", with_zeta(1e6), accept_all, 1e-9 * std::max(1.0, accept_all)));

    bool monotone = true;
    std::string where = "nonincreasing in zeta, nondecreasing in lambda";
    for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      double prev = 2.0;
      for (int k = 0; k <= 480; ++k) {
        const double z = k * 0.0125;
        const double t = config.hybrid ? tail_probability_hybrid(n, r, tau, z, lambda)
                                       : tail_probability_type1(n, tau, z, lambda);
        if (!(t >= 0.0 && t <= 1.0 && t <= prev + 1e-12)) {
          monotone = false;
          where = "breaks at lambda " + exact(lambda) + ", zeta " + exact(z);
        }
        prev = t;
      }
    }
    for (double z : {0.5, 1.0, 2.0, 3.0}) {
      double prev = -1.0;
      for (double lambda = 0.05; lambda <= 8.0; lambda *= 1.25) {
        const double t = config.hybrid ? tail_probability_hybrid(n, r, tau, z, lambda)
                                       : tail_probability_type1(n, tau, z, lambda);
        if (t < prev - 1e-12) {
          monotone = false;
          where = "decreases in lambda at zeta " + exact(z);
        }
        prev = t;
      }
    }
    checks.push_back({"tail probability monotone", monotone, where});
  }

  const double closed = evaluate_plan(config, plan).total;
  checks.push_back(within_se("plan risk vs simulation (3 se)",
                             simulate_dsp_risk(plan, config.costs, config.acceptance, prior, mc), closed, 3.0));
  if (n > 0) {
    const auto [m_est, t_est] = simulate_moments(scheme, prior, mc);
    const double em = config.hybrid ? expected_failures_hybrid(n, r, tau, prior) : expected_failures_type1(n, tau, prior);
    const double et = config.hybrid ? expected_duration_hybrid(n, r, tau, prior) : tau;
    checks.push_back(within_se("E(M) vs simulation (3 se)", m_est, em, 3.0));
    if (config.hybrid) checks.push_back(within_se("E(tau*) vs simulation (3 se)", t_est, et, 3.0));
  }

  const auto violations = bound_violations(config, report);
  checks.push_back({"optimum bounds", violations.empty(),
                    violations.empty() ? "risk " + exact(report.risk) + " within bounds" : violations.front()});

  // Bayes rule: the posterior cost crosses Cr at the root and decreases in z.
  if (n > 0 && cr > config.acceptance.constant()) {
    bool ok = true;
    std::string detail = "root and sign agree for m = 0.." + std::to_string(std::min(n, 3));
    for (int m = 0; m <= std::min(n, 3); ++m) {
      const BayesDecisionThreshold t = bsp_threshold(m, n, tau, config.costs, config.acceptance, prior);
      const double z = t.root - prior.rate;
      if (z <= 0.0) continue;
      const double at = posterior_expected_cost(m, z, config.acceptance, prior);
      const double left = posterior_expected_cost(m, 0.5 * z, config.acceptance, prior);
      const double right = posterior_expected_cost(m, 2.0 * z + 1.0, config.acceptance, prior);
      if (std::abs(at - cr) > 1e-7 * cr || !(left > cr) || !(right < cr)) {
        ok = false;
        detail = "m = " + std::to_string(m) + ": cost " + exact(at) + " at root";
      }
    }
    checks.push_back({"Bayes rule threshold", ok, detail});
    const MCEstimate bsp = bsp_bayes_risk_mc(scheme, config.costs, config.acceptance, prior, mc);
    checks.push_back({"Bayes rule no worse than plan (3 se)", bsp.mean <= closed + 3.0 * bsp.std_error,
                      "bsp " + exact(bsp.mean) + " +- " + exact(bsp.std_error) + " vs plan " + exact(closed)});
  }

  if (config.expected_risk)
    checks.push_back(within("expected risk", closed, config.expected_risk->risk, config.expected_risk->tolerance));

  int failed = 0;
  for (const Check& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += c.pass ? 0 : 1;
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kOk : kInvariant;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayes risk and optimum decision-theoretic sampling plans for censored life tests", "dsplan"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string out_path;
  CommandOptions options;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_flag("--mc", options.mc, "add Monte Carlo estimates");
  app.add_flag("--quick", options.quick, "cap Monte Carlo trials at 100000");
  auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed");

  auto* risk = app.add_subcommand("risk", "Bayes risk breakdown of the configured plan");
  auto* optimize = app.add_subcommand("optimize", "grid search for the optimum plan");
  optimize->add_option("--scan-log", options.scan_log, "write per-cell minima to this CSV");
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a published table");
  std::string table_id;
  bool list = false;
  reproduce->add_option("table-id", table_id, "table id or alias");
  reproduce->add_flag("--list", list, "list table ids");
  auto* validate = app.add_subcommand("validate", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }
  if (*seed_opt) options.seed = seed;

  try {
    RunConfig config = config_path.empty() ? default_config() : load_config(config_path);
    if (!out_path.empty()) config.output = out_path;
    if (options.seed) config.mc.seed = *options.seed;
    if (risk->parsed()) return cmd_risk(config, options, out);
    if (optimize->parsed()) return cmd_optimize(config, options, out, err);
    if (validate->parsed()) return cmd_validate(config, options, out);
    if (reproduce->parsed()) {
      if (list) {
        for (const auto& t : published_tables()) {
          out << t.id;
          for (const auto& a : t.aliases) out << " (" << a << ")";
          out << "  " << t.title << '\n';
        }
        return kOk;
      }
      const PublishedTable* table = find_table(table_id);
      if (!table) throw ValidationError("unknown table id '" + table_id + "' (see reproduce --list)");
      return cmd_reproduce(*table, config, options, out, err);
    }
  } catch (const StabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kUnstable;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace dsplan::cli
