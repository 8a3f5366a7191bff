#pragma once

#include <vector>

#include "irsmatch/matching.hpp"
#include "irsmatch/model.hpp"
#include "irsmatch/utility.hpp"

namespace irsmatch {

struct SolutionPoint {
  double qos_cost = 0.0;
  double security_utility = 0.0;
  double money_spent = 0.0;
  double objective = 0.0;
  int start = 0;
  Variant variant = Variant::kAsm;
  int feasible_set_id = 0;
  std::vector<int> match_of_attack;
};

// One solver run per rotation start, deduplicated, budget violators dropped.
std::vector<SolutionPoint> multi_start(const Scenario& s, const DerivedIndex& idx,
                                       const PreferenceProfile& prefs, Variant variant,
                                       const FeasibleSet& set, int set_id,
                                       BudgetSemantics semantics = BudgetSemantics::kPerPair);

// p1 dominates p2: no worse in both objectives (cost down, security up),
// strictly better in at least one; strictness tolerance 1e-12.
bool dominates(const SolutionPoint& p1, const SolutionPoint& p2);

// Maximal set under dominates; descending security, then ascending cost.
std::vector<SolutionPoint> pareto_front(const std::vector<SolutionPoint>& points);

}  // namespace irsmatch
