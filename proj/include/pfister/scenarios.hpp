#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfister/finite_form.hpp"
#include "pfister/json.hpp"
#include "pfister/report.hpp"

namespace pfister {

struct ScenarioConfig {
  FiniteField field = FiniteField::standard(4);
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  int degree_bound = 2;
  int n = 2;
  int s = 3;
  // Random P per configuration in ladder-fuzz.
  std::uint64_t samples = 1000;
  // Random pairs in cross-criteria.
  std::size_t pairs = 500;
  Exec exec = Exec::Parallel;

  Json to_json() const;
};

std::vector<std::string> scenario_names();
// Throws UnknownScenario.
Report run_scenario(const std::string& name, const ScenarioConfig& cfg);
// {"scenario": name, ...parameters} or a custom claims list:
// {"scenario": "custom", "variables": [...], "claims": [{"id", "hyperbolic": "<symbol sum or form>"}]}.
Report run_scenario_file(const Json& def, ScenarioConfig cfg);

}  // namespace pfister
