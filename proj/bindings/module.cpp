// Python bindings for the main operations. Scenarios and solutions cross the
// boundary as JSON strings (the same schema the CLI reads and writes), which
// keeps the Python surface small and versioned.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irsmatch/bounds.hpp"
#include "irsmatch/errors.hpp"
#include "irsmatch/experiment.hpp"
#include "irsmatch/matching.hpp"
#include "irsmatch/pareto.hpp"
#include "irsmatch/scenario_io.hpp"

namespace py = pybind11;
using namespace irsmatch;

namespace {

Scenario parse(const std::string& scenario_json) {
  Scenario s = scenario_from_json(scenario_json);
  const ValidationReport report = validate(s);
  if (!report.ok()) throw InputError("invalid scenario:\n" + report.summary());
  return s;
}

BudgetSemantics semantics_of(const std::string& name) {
  if (name == "per-pair") return BudgetSemantics::kPerPair;
  if (name == "per-countermeasure") return BudgetSemantics::kPerCountermeasure;
  throw InputError("unknown budget semantics: " + name);
}

Variant variant_of(const std::string& name) {
  if (name == "asm") return Variant::kAsm;
  if (name == "csm") return Variant::kCsm;
  throw InputError("unknown variant: " + name);
}

}  // namespace

PYBIND11_MODULE(_irsmatch, m) {
  m.doc() = "Joint security/QoS countermeasure selection via stable matching";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  m.def(
      "generate",
      [](int nodes, int attacks, int countermeasures, double coverage, double budget,
         std::vector<double> betas, std::uint64_t seed, double node_density,
         double coverage_density) {
        GeneratorParams p;
        p.n_nodes = nodes;
        p.n_attacks = attacks;
        p.n_countermeasures = countermeasures;
        p.coverage_fraction = coverage;
        p.budget_xi = budget;
        if (betas.size() != 3) throw InputError("betas must have exactly 3 entries");
        p.betas = {betas[0], betas[1], betas[2]};
        p.seed = seed;
        p.node_density = node_density;
        p.coverage_density = coverage_density;
        return scenario_to_json(generate(p));
      },
      py::arg("nodes") = 100, py::arg("attacks") = 20, py::arg("countermeasures") = 4,
      py::arg("coverage") = 1.0, py::arg("budget") = 6.0,
      py::arg("betas") = std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3},
      py::arg("seed") = 0, py::arg("node_density") = 0.5,
      py::arg("coverage_density") = 0.5,
      "Generate a seeded random scenario; returns scenario JSON.");

  m.def(
      "validate_scenario",
      [](const std::string& scenario_json) {
        const Scenario s = scenario_from_json(scenario_json);
        const ValidationReport report = validate(s);
        std::vector<std::string> messages;
        for (const auto& v : report.violations)
          messages.push_back(v.type + "[" + std::to_string(v.id) + "]." + v.field + ": " +
                             v.message);
        return messages;
      },
      py::arg("scenario_json"),
      "Return the list of invariant violations (empty means valid).");

  m.def(
      "solve",
      [](const std::string& scenario_json, const std::string& variant,
         const std::string& budget_semantics, bool all_starts, int start) {
        const Scenario s = parse(scenario_json);
        SolveConfig cfg;
        cfg.semantics = semantics_of(budget_semantics);
        cfg.all_starts = all_starts;
        cfg.start = start;
        return solution_to_json(irsmatch::solve(s, variant_of(variant), cfg));
      },
      py::arg("scenario_json"), py::arg("variant") = "asm",
      py::arg("budget_semantics") = "per-pair", py::arg("all_starts") = false,
      py::arg("start") = 0, "Solve a scenario; returns solution JSON.");

  m.def(
      "exact",
      [](const std::string& scenario_json, const std::string& method) {
        const Scenario s = parse(scenario_json);
        const DerivedIndex idx = build_index(s);
        const PreferenceProfile prefs = build_preferences(s, idx);
        ExactSolution sol;
        if (method == "brute") {
          sol = brute_force(s, idx, prefs);
        } else if (method == "bb") {
          sol = branch_and_bound_exact(s, idx, prefs);
        } else {
          throw InputError("unknown method: " + method);
        }
        py::dict d;
        d["feasible"] = sol.feasible;
        d["objective"] = sol.objective;
        d["money"] = sol.money;
        d["certified"] = sol.certified;
        d["gap"] = sol.gap;
        d["match_of_attack"] = sol.match_of_attack;
        return d;
      },
      py::arg("scenario_json"), py::arg("method") = "bb",
      "Exact optimum via brute force or branch and bound.");

  m.def(
      "upper_bound",
      [](const std::string& scenario_json, int max_iter) {
        const Scenario s = parse(scenario_json);
        const DerivedIndex idx = build_index(s);
        const PreferenceProfile prefs = build_preferences(s, idx);
        DualConfig cfg;
        cfg.max_iter = max_iter;
        const BoundResult r = optimize_duals(s, idx, prefs, cfg);
        py::dict d;
        d["upper_bound"] = r.upper_bound;
        d["rho"] = r.duals.rho;
        d["theta"] = r.duals.theta;
        d["mu"] = r.mu;
        return d;
      },
      py::arg("scenario_json"), py::arg("max_iter") = 200,
      "Dual (Lagrangian) upper bound on the best objective.");

  m.def(
      "check_stability",
      [](const std::string& scenario_json, const std::string& solution_json) {
        const Scenario s = parse(scenario_json);
        const Solution sol = solution_from_json(solution_json);
        const DerivedIndex idx = build_index(s);
        const PreferenceProfile prefs = build_preferences(s, idx);
        const PreferenceProfile restricted =
            restrict_preferences(prefs, sol.matching.feasible_members);
        std::vector<int> quotas(idx.n_countermeasures());
        for (int c = 0; c < idx.n_countermeasures(); ++c)
          quotas[c] = static_cast<int>(idx.w_of_c[c].size());
        const auto blocks = blocking_pairs(sol.matching, restricted, quotas);
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& b : blocks) out.emplace_back(b.attack, b.countermeasure, b.condition);
        return out;
      },
      py::arg("scenario_json"), py::arg("solution_json"),
      "Blocking pairs of a solution as (attack, countermeasure, condition) tuples.");

  m.def(
      "pareto_csv",
      [](const std::string& scenario_json) { return pareto_table(parse(scenario_json)).to_csv(); },
      py::arg("scenario_json"),
      "Multi-start points and Pareto front flags as CSV text.");

  m.def(
      "experiment_csv",
      [](const std::string& preset, int runs, std::uint64_t seed) {
        ExperimentConfig cfg = experiment_preset(preset);
        if (runs > 0) cfg.runs = runs;
        cfg.base_seed = seed;
        return run_experiment(cfg).to_csv();
      },
      py::arg("preset"), py::arg("runs") = 0, py::arg("seed") = 1,
      "Run a named sweep preset and return its CSV table.");
}
