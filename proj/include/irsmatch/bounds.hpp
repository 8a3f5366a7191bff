#pragma once

#include <vector>

#include "irsmatch/model.hpp"
#include "irsmatch/utility.hpp"

namespace irsmatch {

struct DualVariables {
  double rho = 0.0;            // multiplier of the coverage constraint, >= 0
  std::vector<double> theta;   // per-attack multipliers of the assignment constraint
};

struct BoundResult {
  double upper_bound = 0.0;
  DualVariables duals;
  std::vector<double> mu;                       // per-countermeasure subproblem values
  int iterations = 0;
  std::vector<std::vector<int>> relaxed_choice; // per countermeasure: chosen attacks
};

struct ExactSolution {
  bool feasible = false;
  std::vector<int> match_of_attack;
  double objective = 0.0;
  double money = 0.0;
  long long nodes_explored = 0;
  bool certified = true;   // false when the node budget ran out
  double gap = 0.0;        // bound - incumbent when not certified
};

// Ground-truth oracle: enumerates every assignment of attacks to
// {unmatched} + covering countermeasures. Throws GuardError when the
// assignment count exceeds 1e7.
ExactSolution brute_force(const Scenario& s, const DerivedIndex& idx,
                          const PreferenceProfile& prefs,
                          BudgetSemantics semantics = BudgetSemantics::kPerPair);

// Per-countermeasure 0/1 knapsack of the relaxation: maximize the dualized
// coefficients subject to the (replicated) monetary budget. Equal item
// weights reduce it to taking the largest positive coefficients.
std::pair<double, std::vector<int>> knapsack_subproblem(int c, const DualVariables& duals,
                                                        const Scenario& s,
                                                        const DerivedIndex& idx,
                                                        const PreferenceProfile& prefs);

// Decomposed upper bound at fixed duals: sum of subproblem values minus
// rho * M_bar minus sum of thetas. Valid for rho >= 0 (and theta <= 0 when
// coverage is partial, where the assignment constraint is at-most-one).
BoundResult lagrangian_bound(const Scenario& s, const DerivedIndex& idx,
                             const PreferenceProfile& prefs, const DualVariables& duals);

struct DualConfig {
  int max_iter = 200;
  double step0 = 1.0;  // step rule t_k = step0 / sqrt(k)
};

// Projected subgradient descent on the dual; returns the best (lowest) bound
// seen, which is the zero-dual bound when max_iter == 0.
BoundResult optimize_duals(const Scenario& s, const DerivedIndex& idx,
                           const PreferenceProfile& prefs, const DualConfig& cfg = {});

struct BbConfig {
  long long node_budget = 1'000'000;
  DualConfig duals;
};

// Depth-first branch and bound over per-attack assignments, pruned with the
// dual bound at fixed decisions. Certified equal to brute_force unless the
// node budget runs out, in which case the incumbent plus gap is returned.
ExactSolution branch_and_bound_exact(const Scenario& s, const DerivedIndex& idx,
                                     const PreferenceProfile& prefs, const BbConfig& cfg = {});

}  // namespace irsmatch
