#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "dsplan/errors.hpp"

namespace dsplan::cli {

namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("config: missing field ") + key);
  const json& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (!v.is_number()) throw ValidationError(std::string("config: field ") + key + " must be a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

std::int64_t integer(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ValidationError(std::string("config: field ") + key + " must be an integer");
  return v.get<std::int64_t>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ValidationError(std::string("config: unknown field ") + where + key);
  }
}

}  // namespace

void RunConfig::validate() const {
  prior.validate();
  costs.validate();
  grid.validate();
  mc.validate();
  if (plan) {
    std::visit([](const auto& p) { p.validate(); }, *plan);
    if (std::holds_alternative<HybridPlan>(*plan) != hybrid)
      throw ValidationError("config: plan does not match scheme");
  }
  if (expected_risk && !(expected_risk->tolerance >= 0.0))
    throw ValidationError("config: expected_risk.tolerance must be >= 0");
}

RunConfig default_config() {
  RunConfig c;
  c.plan = Type1Plan{3, 0.725, 2.975};
  return c;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config: top level must be an object");
  reject_unknown(j, {"schema_version", "scheme", "prior", "costs", "acceptance", "plan", "grid", "mc",
                     "output", "expected_risk"}, "");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion)
    throw ValidationError("config: schema_version must be " + std::to_string(kSchemaVersion));

  RunConfig c;
  try {
    if (j.contains("scheme")) {
      const std::string s = j["scheme"].get<std::string>();
      if (s == "type1") c.hybrid = false;
      else if (s == "hybrid") c.hybrid = true;
      else throw ValidationError("config: scheme must be type1 or hybrid");
    }
    if (j.contains("prior")) {
      const json& p = j["prior"];
      reject_unknown(p, {"a", "b"}, "prior.");
      c.prior = {number(p, "a"), number(p, "b")};
    }
    if (j.contains("costs")) {
      const json& k = j["costs"];
      reject_unknown(k, {"Cs", "Ctau", "Cr", "rs"}, "costs.");
      c.costs = {number(k, "Cs"), number_or(k, "Ctau", 0.0), number(k, "Cr"), number_or(k, "rs", 0.0)};
    }
    if (j.contains("acceptance")) {
      const json& a = j["acceptance"];
      if (!a.is_array()) throw ValidationError("config: acceptance must be an array");
      std::vector<AcceptanceCost::Term> terms;
      for (const json& t : a) {
        reject_unknown(t, {"a", "p"}, "acceptance[].");
        terms.push_back({number(t, "a"), number(t, "p")});
      }
      c.acceptance = AcceptanceCost(std::move(terms));
    }
    if (j.contains("plan")) {
      const json& p = j["plan"];
      reject_unknown(p, {"n", "r", "tau", "zeta"}, "plan.");
      const int n = static_cast<int>(integer(p, "n"));
      if (c.hybrid)
        c.plan = HybridPlan{n, static_cast<int>(integer(p, "r")), number(p, "tau"), number(p, "zeta")};
      else
        c.plan = Type1Plan{n, number(p, "tau"), number(p, "zeta")};
    }
    if (j.contains("grid")) {
      const json& g = j["grid"];
      reject_unknown(g, {"zeta_step", "tau_step", "zeta_cap", "alpha", "max_tau_points", "runner_ups", "max_n"},
                     "grid.");
      c.grid.zeta_step = number_or(g, "zeta_step", c.grid.zeta_step);
      c.grid.tau_step = number_or(g, "tau_step", c.grid.tau_step);
      c.grid.zeta_cap = number_or(g, "zeta_cap", c.grid.zeta_cap);
      c.grid.alpha = number_or(g, "alpha", c.grid.alpha);
      if (g.contains("max_tau_points")) c.grid.max_tau_points = static_cast<int>(integer(g, "max_tau_points"));
      if (g.contains("max_n")) c.grid.max_n = static_cast<int>(integer(g, "max_n"));
      if (g.contains("runner_ups")) c.grid.runner_up_count = static_cast<int>(integer(g, "runner_ups"));
    }
    if (j.contains("mc")) {
      const json& m = j["mc"];
      reject_unknown(m, {"trials", "seed", "workers"}, "mc.");
      if (m.contains("trials")) c.mc.trials = integer(m, "trials");
      if (m.contains("seed")) c.mc.seed = m["seed"].get<std::uint64_t>();
      if (m.contains("workers")) c.mc.workers = static_cast<int>(integer(m, "workers"));
    }
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (j.contains("expected_risk")) {
      const json& e = j["expected_risk"];
      reject_unknown(e, {"risk", "tolerance"}, "expected_risk.");
      c.expected_risk = ExpectedRisk{number(e, "risk"), number_or(e, "tolerance", 1e-6)};
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dsplan::cli
