#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irsmatch/scenario_io.hpp"

namespace irsmatch {

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

// One point of a sweep: the swept parameter name/value plus the full
// generator parameterization for that cell.
struct SweepCell {
  std::string param;
  std::string value;
  GeneratorParams params;
};

struct ExperimentConfig {
  std::string name;  // beta-sweep | budget-sweep | size-sweep | coverage-sweep | pareto
  int runs = 0;
  std::uint64_t base_seed = 1;
  std::vector<SweepCell> cells;
};

// Named preset with the reference parameterization embedded. Throws
// InputError for unknown names.
ExperimentConfig experiment_preset(const std::string& name);

// Per cell x variant: mean/std of the solution aggregates over `runs` seeded
// scenarios (seed = base_seed + run). Deterministic given base_seed,
// regardless of worker count.
ResultTable run_experiment(const ExperimentConfig& config);

// The pareto preset emits per-point rows instead of summary statistics; the
// front flag is computed per (seed, feasible set) across both variants.
ResultTable run_pareto_experiment(const ExperimentConfig& config);

// Per-scenario Pareto report used by the `pareto` CLI subcommand.
ResultTable pareto_table(const Scenario& s);

}  // namespace irsmatch
