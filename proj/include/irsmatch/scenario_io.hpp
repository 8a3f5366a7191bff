#pragma once

#include <cstdint>
#include <string>

#include "irsmatch/matching.hpp"
#include "irsmatch/model.hpp"

namespace irsmatch {

struct GeneratorParams {
  int n_nodes = 100;
  int n_attacks = 20;
  int n_countermeasures = 4;
  double coverage_fraction = 1.0;
  double budget_xi = 6.0;
  std::array<double, 3> betas{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  std::uint64_t seed = 0;
  // Probability that an attack affects a node, and that a countermeasure
  // covers an attack. Incidence densities are not pinned by any reference
  // data, so they are exposed for sensitivity analysis.
  double node_density = 0.5;
  double coverage_density = 0.5;
};

// Seeded, platform-stable random scenario (SplitMix64 stream). Orphan repair
// guarantees every attack has a coverer and every countermeasure an attack.
Scenario generate(const GeneratorParams& params);

// JSON serialization. load accepts unknown fields with a warning on stderr;
// schema_version mismatches and malformed data raise InputError.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);
void save_scenario(const Scenario& s, const std::string& path);
Scenario load_scenario(const std::string& path);

std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);

}  // namespace irsmatch
