#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "irsmatch/bounds.hpp"
#include "irsmatch/errors.hpp"
#include "irsmatch/experiment.hpp"
#include "irsmatch/matching.hpp"
#include "irsmatch/pareto.hpp"
#include "irsmatch/scenario_io.hpp"

#include <json.hpp>

namespace {

using namespace irsmatch;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitGuard = 4;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << content;
}

Scenario load_validated(const std::string& path) {
  Scenario s = load_scenario(path);
  const ValidationReport report = validate(s);
  if (!report.ok()) throw InputError("invalid scenario:\n" + report.summary());
  return s;
}

BudgetSemantics parse_semantics(const std::string& text) {
  if (text == "per-pair") return BudgetSemantics::kPerPair;
  if (text == "per-countermeasure") return BudgetSemantics::kPerCountermeasure;
  throw InputError("unknown budget semantics: " + text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int run(int argc, char** argv) {
  CLI::App app{"Security countermeasure selection via stable matching"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded random scenario");
  GeneratorParams gp;
  std::string out_path;
  gen->add_option("--nodes", gp.n_nodes, "Number of nodes");
  gen->add_option("--attacks", gp.n_attacks, "Number of attack types");
  gen->add_option("--countermeasures", gp.n_countermeasures, "Number of countermeasure types");
  gen->add_option("--coverage", gp.coverage_fraction, "Coverage fraction (0,1]");
  gen->add_option("--budget", gp.budget_xi, "Monetary budget xi");
  gen->add_option("--beta", gp.betas, "Beta coefficients (3 values summing to 1)");
  gen->add_option("--seed", gp.seed, "PRNG seed");
  gen->add_option("--node-density", gp.node_density, "P(attack affects a node)");
  gen->add_option("--coverage-density", gp.coverage_density, "P(countermeasure covers an attack)");
  gen->add_option("-o,--output", out_path, "Output path (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve a scenario with ASM or CSM");
  std::string scenario_path, variant_name = "asm", semantics_name = "per-pair";
  int start = 0;
  bool all_starts = false;
  solve_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  solve_cmd->add_option("--variant", variant_name, "asm | csm");
  solve_cmd->add_option("--budget-semantics", semantics_name, "per-pair | per-countermeasure");
  solve_cmd->add_option("--start", start, "Rotation start index");
  solve_cmd->add_flag("--all-starts", all_starts, "Consider every rotation start");
  solve_cmd->add_option("-o,--output", out_path, "Output path (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Stability report for a solution");
  std::string solution_path;
  check->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  check->add_option("solution", solution_path, "Solution JSON file")->required();
  check->add_option("-o,--output", out_path, "Output path (default stdout)");

  // bound
  auto* bound = app.add_subcommand("bound", "Lagrangian upper bound with optimized duals");
  int max_iter = 200;
  bound->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  bound->add_option("--max-iter", max_iter, "Subgradient iterations");
  bound->add_option("-o,--output", out_path, "Output path (default stdout)");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact solution (brute force or branch and bound)");
  std::string method = "bb";
  exact->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  exact->add_option("--method", method, "brute | bb");
  exact->add_option("--budget-semantics", semantics_name, "per-pair | per-countermeasure");
  exact->add_option("-o,--output", out_path, "Output path (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a simulation sweep preset");
  std::string preset_name;
  int runs_override = 0;
  std::uint64_t base_seed = 1;
  experiment->add_option("preset", preset_name,
                         "beta-sweep | budget-sweep | size-sweep | coverage-sweep | pareto")
      ->required();
  experiment->add_option("--runs", runs_override, "Override the preset run count");
  experiment->add_option("--seed", base_seed, "Base seed (per-run seed = base + run index)");
  experiment->add_option("-o,--output", out_path, "Output CSV path (default stdout)");

  // pareto
  auto* pareto = app.add_subcommand("pareto", "Multi-start points and Pareto front for a scenario");
  pareto->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  pareto->add_option("-o,--output", out_path, "Output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    write_output(out_path, scenario_to_json(generate(gp)));
    return kExitOk;
  }

  if (solve_cmd->parsed()) {
    const Scenario s = load_validated(scenario_path);
    SolveConfig cfg;
    cfg.semantics = parse_semantics(semantics_name);
    cfg.start = start;
    cfg.all_starts = all_starts;
    Variant variant;
    if (variant_name == "asm") {
      variant = Variant::kAsm;
    } else if (variant_name == "csm") {
      variant = Variant::kCsm;
    } else {
      throw InputError("unknown variant: " + variant_name);
    }
    const Solution sol = solve(s, variant, cfg);
    write_output(out_path, solution_to_json(sol));
    return sol.feasible ? kExitOk : kExitInfeasible;
  }

  if (check->parsed()) {
    const Scenario s = load_validated(scenario_path);
    const Solution sol = solution_from_json(read_file(solution_path));
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    const PreferenceProfile restricted =
        restrict_preferences(prefs, sol.matching.feasible_members);
    std::vector<int> quotas(idx.n_countermeasures());
    for (int c = 0; c < idx.n_countermeasures(); ++c)
      quotas[c] = static_cast<int>(idx.w_of_c[c].size());
    const auto blocks = blocking_pairs(sol.matching, restricted, quotas);
    json j;
    j["stable"] = blocks.empty();
    j["blocking_pairs"] = json::array();
    for (const auto& b : blocks)
      j["blocking_pairs"].push_back({{"attack", b.attack},
                                     {"countermeasure", b.countermeasure},
                                     {"condition", b.condition}});
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
  }

  if (bound->parsed()) {
    const Scenario s = load_validated(scenario_path);
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    DualConfig cfg;
    cfg.max_iter = max_iter;
    const BoundResult r = optimize_duals(s, idx, prefs, cfg);
    json j;
    j["upper_bound"] = r.upper_bound;
    j["rho"] = r.duals.rho;
    j["theta"] = r.duals.theta;
    j["mu"] = r.mu;
    j["iterations"] = r.iterations;
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
  }

  if (exact->parsed()) {
    const Scenario s = load_validated(scenario_path);
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    ExactSolution sol;
    if (method == "brute") {
      sol = brute_force(s, idx, prefs, parse_semantics(semantics_name));
    } else if (method == "bb") {
      sol = branch_and_bound_exact(s, idx, prefs);
    } else {
      throw InputError("unknown method: " + method);
    }
    json j;
    j["feasible"] = sol.feasible;
    j["objective"] = sol.objective;
    j["money"] = sol.money;
    j["certified"] = sol.certified;
    j["gap"] = sol.gap;
    j["nodes_explored"] = sol.nodes_explored;
    j["pairs"] = json::array();
    for (int a = 0; a < static_cast<int>(sol.match_of_attack.size()); ++a)
      if (sol.match_of_attack[a] >= 0)
        j["pairs"].push_back({{"attack", a}, {"countermeasure", sol.match_of_attack[a]}});
    write_output(out_path, j.dump(2) + "\n");
    return sol.feasible ? kExitOk : kExitInfeasible;
  }

  if (experiment->parsed()) {
    ExperimentConfig cfg = experiment_preset(preset_name);
    if (runs_override > 0) cfg.runs = runs_override;
    cfg.base_seed = base_seed;
    write_output(out_path, run_experiment(cfg).to_csv());
    return kExitOk;
  }

  if (pareto->parsed()) {
    const Scenario s = load_validated(scenario_path);
    write_output(out_path, pareto_table(s).to_csv());
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const irsmatch::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const irsmatch::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
