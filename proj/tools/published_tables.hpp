#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsplan/model.hpp"

namespace dsplan::cli {

enum class SchemeKind { type1, hybrid };

/// Base configuration shared by every row of a published table.
struct TableSetting {
  SchemeKind scheme;
  GammaPrior prior;
  CostModel costs;
  std::vector<AcceptanceCost::Term> acceptance;
};

/// A parameter override applied to the base setting: a, b, a0..a5, Cs, Ctau, Cr, rs.
struct Override {
  std::string name;
  double value;
};

/// Published comparison plan from another method, echoed as-is.
struct ComparisonEntry {
  std::string method;
  double risk;
  int n;
  double tau;
  double statistic;
};

struct PublishedRow {
  std::vector<Override> overrides;
  double risk;
  int n;
  int r;  // 0 for Type-I
  double tau;
  double zeta;
  std::optional<double> bsp_risk;
  std::vector<ComparisonEntry> comparisons;
  /// Sample-size cap of the published search; 0 when the risk bound applies.
  int max_n = 0;
};

struct PublishedTable {
  std::string id;
  std::vector<std::string> aliases;
  std::string title;
  TableSetting setting;
  std::vector<PublishedRow> rows;
};

const std::vector<PublishedTable>& published_tables();

/// Finds a table by id or alias; nullptr when unknown.
const PublishedTable* find_table(const std::string& id);

/// Base setting with the row's overrides applied.
TableSetting apply_overrides(const TableSetting& base, const std::vector<Override>& overrides);

std::string describe(const std::vector<Override>& overrides);

}  // namespace dsplan::cli
