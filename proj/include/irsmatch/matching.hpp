#pragma once

#include <utility>
#include <vector>

#include "irsmatch/feasibility.hpp"
#include "irsmatch/model.hpp"
#include "irsmatch/utility.hpp"

namespace irsmatch {

enum class Variant { kAsm, kCsm };

struct Matching {
  std::vector<int> match_of_attack;  // countermeasure id or -1
  int start = 0;
  Variant variant = Variant::kAsm;
  std::vector<int> feasible_members;
  long long covered_instances = 0;
  long long proposal_steps = 0;

  std::vector<std::pair<int, int>> pairs() const;  // (attack, countermeasure)
  bool operator==(const Matching& other) const {
    return match_of_attack == other.match_of_attack;
  }
};

// Preference lists filtered to a feasible set's members.
PreferenceProfile restrict_preferences(const PreferenceProfile& prefs,
                                       const std::vector<int>& members);

// Attack-oriented solver: attacks, visited in rotation order from `start`,
// each take the first countermeasure on their restricted list until the
// coverage threshold is met.
Matching run_asm(const FeasibleSet& set, const PreferenceProfile& restricted,
                 const DerivedIndex& idx, long long m_bar_abs, int start);

// Countermeasure-oriented solver: deferred acceptance in vertical rounds with
// successor deletion, stopping once the coverage threshold is met.
Matching run_csm(const FeasibleSet& set, const PreferenceProfile& restricted,
                 const DerivedIndex& idx, long long m_bar_abs, int start);

struct BlockingPair {
  int attack = -1;
  int countermeasure = -1;
  int condition = 0;  // 3: under quota with positive utility, 4: preferred displacement
};

// All blocking pairs of a matching under the given preference profile; quotas
// indexed by countermeasure id. Empty result means stable.
std::vector<BlockingPair> blocking_pairs(const Matching& m, const PreferenceProfile& prefs,
                                         const std::vector<int>& quotas);

struct SolveConfig {
  BudgetSemantics semantics = BudgetSemantics::kPerPair;
  bool all_starts = false;
  int start = 0;
  FeasibilityConfig feasibility;
};

struct Solution {
  bool feasible = false;
  Matching matching;
  Aggregates aggregates;
  int feasible_set_index = -1;
  long long candidates_considered = 0;
};

// Budget constraint "strictly below xi" on real-valued money.
inline bool within_budget(double money, double xi) { return money <= xi - 1e-9; }

// Overall selector: enumerate feasible sets, run the chosen solver per set
// (and per rotation start when all_starts), keep budget-respecting matchings,
// return the objective maximizer. Infeasibility is a value, not an error.
Solution solve(const Scenario& s, Variant variant, const SolveConfig& cfg = {});

}  // namespace irsmatch
