#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dsplan/mc_oracle.hpp"
#include "dsplan/model.hpp"
#include "dsplan/search.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan::cli {

inline constexpr int kSchemaVersion = 1;

struct ExpectedRisk {
  double risk = 0.0;
  double tolerance = 0.0;
};

struct RunConfig {
  bool hybrid = false;
  GammaPrior prior{2.5, 0.8};
  CostModel costs{0.5, 0.5, 30.0, 0.0};
  AcceptanceCost acceptance = AcceptanceCost::quadratic(2.0, 2.0, 2.0);
  /// Plan for `risk` and `validate`; r is ignored for Type-I.
  std::optional<Plan> plan;
  GridSpec grid;
  MCConfig mc;
  std::string output;
  std::optional<ExpectedRisk> expected_risk;

  /// Checks every module precondition; throws ValidationError.
  void validate() const;
};

/// The Type-I quadratic-loss setting with plan (3, 0.725, 2.975).
RunConfig default_config();

/// Parses a JSON document; throws ValidationError on schema errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace dsplan::cli
