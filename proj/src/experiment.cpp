#include "irsmatch/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "irsmatch/errors.hpp"
#include "irsmatch/parallel.hpp"
#include "irsmatch/pareto.hpp"

namespace irsmatch {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct RunStats {
  int feasible = 0;
  // sums and sums of squares per metric, aggregate totals and per-pair means
  struct Acc {
    double sum = 0.0, sq = 0.0;
    void add(double v) {
      sum += v;
      sq += v * v;
    }
    double mean(int n) const { return n > 0 ? sum / n : 0.0; }
    double stdev(int n) const {
      if (n < 2) return 0.0;
      const double m = mean(n);
      const double var = (sq - n * m * m) / (n - 1);
      return var > 0.0 ? std::sqrt(var) : 0.0;
    }
  };
  Acc objective, security, qos_cost, time, energy, money;
  Acc time_pp, energy_pp, money_pp;  // per matched pair
};

}  // namespace

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "\n");
  return os.str();
}

ExperimentConfig experiment_preset(const std::string& name) {
  ExperimentConfig cfg;
  cfg.name = name;
  auto cell = [](std::string param, std::string value, GeneratorParams p) {
    return SweepCell{std::move(param), std::move(value), p};
  };

  if (name == "beta-sweep") {
    cfg.runs = 1000;
    GeneratorParams base;
    base.n_attacks = 10;
    base.n_countermeasures = 4;
    base.coverage_fraction = 0.9;
    base.budget_xi = 6.0;
    const std::array<std::array<double, 3>, 4> grid{{{0.9, 0.05, 0.05},
                                                     {0.05, 0.9, 0.05},
                                                     {0.05, 0.05, 0.9},
                                                     {1.0 / 3, 1.0 / 3, 1.0 / 3}}};
    const char* labels[4] = {"time-heavy", "energy-heavy", "money-heavy", "equal"};
    for (int i = 0; i < 4; ++i) {
      GeneratorParams p = base;
      p.betas = grid[i];
      cfg.cells.push_back(cell("beta", labels[i], p));
    }
  } else if (name == "budget-sweep") {
    cfg.runs = 200;
    for (int xi = 4; xi <= 12; ++xi) {
      GeneratorParams p;
      p.n_attacks = 20;
      p.n_countermeasures = 10;
      p.coverage_fraction = 1.0;
      p.budget_xi = xi;
      cfg.cells.push_back(cell("xi", std::to_string(xi), p));
    }
  } else if (name == "size-sweep") {
    cfg.runs = 200;
    for (int c : {4, 6, 8, 10, 12}) {
      GeneratorParams p;
      p.n_attacks = 20;
      p.n_countermeasures = c;
      p.coverage_fraction = 0.9;
      p.budget_xi = 15.0;
      cfg.cells.push_back(cell("C", std::to_string(c), p));
    }
    for (int a : {20, 25, 30, 35, 40}) {
      GeneratorParams p;
      p.n_attacks = a;
      p.n_countermeasures = 4;
      p.coverage_fraction = 0.9;
      p.budget_xi = 15.0;
      cfg.cells.push_back(cell("A", std::to_string(a), p));
    }
  } else if (name == "coverage-sweep") {
    cfg.runs = 500;
    for (int pct : {50, 60, 70, 80, 90, 100}) {
      GeneratorParams p;
      p.n_attacks = 10;
      p.n_countermeasures = 4;
      p.coverage_fraction = pct / 100.0;
      p.budget_xi = 6.0;
      cfg.cells.push_back(cell("coverage_pct", std::to_string(pct), p));
    }
  } else if (name == "pareto") {
    cfg.runs = 200;
    GeneratorParams p;
    p.n_attacks = 20;
    p.n_countermeasures = 4;
    p.coverage_fraction = 0.8;
    p.budget_xi = 7.0;
    cfg.cells.push_back(cell("seed", "per-run", p));
  } else {
    throw InputError("unknown experiment preset: " + name);
  }
  return cfg;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  if (config.name == "pareto") return run_pareto_experiment(config);

  ResultTable table;
  table.columns = {"experiment",    "param",          "value",         "variant",
                   "runs",          "infeasible",     "mean_objective", "std_objective",
                   "mean_security", "std_security",   "mean_qos_cost", "std_qos_cost",
                   "mean_time",     "std_time",       "mean_energy",   "std_energy",
                   "mean_money",    "std_money",      "mean_time_per_pair",
                   "mean_energy_per_pair", "mean_money_per_pair",
                   "mean_objective_per_attack", "mean_security_per_attack"};

  for (const auto& cell : config.cells) {
    std::vector<Solution> asm_runs(config.runs), csm_runs(config.runs);
    parallel_for(config.runs, [&](int r) {
      GeneratorParams p = cell.params;
      p.seed = config.base_seed + static_cast<std::uint64_t>(r);
      const Scenario s = generate(p);
      asm_runs[r] = solve(s, Variant::kAsm);
      csm_runs[r] = solve(s, Variant::kCsm);
    });

    for (Variant variant : {Variant::kAsm, Variant::kCsm}) {
      const auto& runs = variant == Variant::kAsm ? asm_runs : csm_runs;
      RunStats st;
      for (const auto& sol : runs) {
        if (!sol.feasible) continue;
        ++st.feasible;
        const Aggregates& a = sol.aggregates;
        st.objective.add(a.objective);
        st.security.add(a.security_utility);
        st.qos_cost.add(a.qos_cost);
        st.time.add(a.total_time);
        st.energy.add(a.total_energy);
        st.money.add(a.total_money);
        const auto n_pairs = static_cast<double>(sol.matching.pairs().size());
        if (n_pairs > 0) {
          st.time_pp.add(a.total_time / n_pairs);
          st.energy_pp.add(a.total_energy / n_pairs);
          st.money_pp.add(a.total_money / n_pairs);
        }
      }
      const int n = st.feasible;
      const double n_attacks = cell.params.n_attacks;
      table.rows.push_back(
          {config.name, cell.param, cell.value,
           variant == Variant::kAsm ? "asm" : "csm", std::to_string(config.runs),
           std::to_string(config.runs - n), fmt(st.objective.mean(n)),
           fmt(st.objective.stdev(n)), fmt(st.security.mean(n)), fmt(st.security.stdev(n)),
           fmt(st.qos_cost.mean(n)), fmt(st.qos_cost.stdev(n)), fmt(st.time.mean(n)),
           fmt(st.time.stdev(n)), fmt(st.energy.mean(n)), fmt(st.energy.stdev(n)),
           fmt(st.money.mean(n)), fmt(st.money.stdev(n)), fmt(st.time_pp.mean(n)),
           fmt(st.energy_pp.mean(n)), fmt(st.money_pp.mean(n)),
           fmt(st.objective.mean(n) / n_attacks), fmt(st.security.mean(n) / n_attacks)});
    }
  }
  return table;
}

namespace {

void append_pareto_rows(ResultTable& table, const Scenario& s, const std::string& seed_label) {
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const auto feasible = enumerate_feasible(s, idx);

  for (int set_id = 0; set_id < static_cast<int>(feasible.size()); ++set_id) {
    std::vector<SolutionPoint> points;
    for (Variant variant : {Variant::kAsm, Variant::kCsm}) {
      auto pts = multi_start(s, idx, prefs, variant, feasible[set_id], set_id);
      points.insert(points.end(), pts.begin(), pts.end());
    }
    const auto front = pareto_front(points);
    auto on_front = [&](const SolutionPoint& p) {
      for (const auto& f : front)
        if (f.variant == p.variant && f.start == p.start &&
            f.match_of_attack == p.match_of_attack)
          return true;
      return false;
    };
    std::ostringstream members;
    for (std::size_t i = 0; i < feasible[set_id].members.size(); ++i)
      members << (i ? " " : "") << feasible[set_id].members[i];
    for (const auto& p : points) {
      table.rows.push_back({seed_label, std::to_string(set_id), members.str(),
                            p.variant == Variant::kAsm ? "asm" : "csm",
                            std::to_string(p.start), fmt(p.security_utility),
                            fmt(p.qos_cost), fmt(-p.qos_cost), fmt(p.money_spent),
                            fmt(p.objective), on_front(p) ? "1" : "0"});
    }
  }
}

}  // namespace

ResultTable run_pareto_experiment(const ExperimentConfig& config) {
  ResultTable table;
  table.columns = {"seed",    "feasible_set", "members",  "variant",
                   "start",   "security_utility", "qos_cost", "qos_cost_negated",
                   "money",   "objective",    "on_front"};
  const SweepCell& cell = config.cells.at(0);

  std::vector<ResultTable> partial(config.runs);
  parallel_for(config.runs, [&](int r) {
    GeneratorParams p = cell.params;
    p.seed = config.base_seed + static_cast<std::uint64_t>(r);
    const Scenario s = generate(p);
    append_pareto_rows(partial[r], s, std::to_string(p.seed));
  });
  for (const auto& part : partial)
    table.rows.insert(table.rows.end(), part.rows.begin(), part.rows.end());
  return table;
}

ResultTable pareto_table(const Scenario& s) {
  ResultTable table;
  table.columns = {"seed",    "feasible_set", "members",  "variant",
                   "start",   "security_utility", "qos_cost", "qos_cost_negated",
                   "money",   "objective",    "on_front"};
  append_pareto_rows(table, s, "-");
  return table;
}

}  // namespace irsmatch
