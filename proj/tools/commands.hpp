#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "dsplan/risk_type1.hpp"
#include "dsplan/search.hpp"
#include "published_tables.hpp"

namespace dsplan::cli {

enum ExitCode : int { kOk = 0, kInvariant = 1, kInvalid = 2, kUnstable = 3 };

struct CommandOptions {
  bool mc = false;
  bool quick = false;
  std::optional<std::uint64_t> seed;
  std::string scan_log;
};

/// Configuration for one published row; `base` supplies grid and MC settings.
RunConfig config_for_row(const PublishedTable& table, const PublishedRow& row, const RunConfig& base);

Plan published_plan(const PublishedTable& table, const PublishedRow& row);

/// Risk of a plan under either scheme.
RiskBreakdown evaluate_plan(const RunConfig& config, const Plan& plan);

OptimumReport run_optimizer(const RunConfig& config);

/// Violated optimum bounds: risk <= min(Cr, E g), n (Cs - rs) + tau C_tau <= risk, r <= n.
std::vector<std::string> bound_violations(const RunConfig& config, const OptimumReport& report);

/// Effective MC settings after --seed and --quick.
MCConfig effective_mc(const RunConfig& config, const CommandOptions& options);

/// Each command writes CSV (or a text report) to `out` and returns an exit code.
int cmd_risk(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_optimize(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_reproduce(const PublishedTable& table, const RunConfig& config, const CommandOptions& options,
                  std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& out);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsplan::cli
