#pragma once

#include <cmath>
#include <vector>

#include "irsmatch/model.hpp"

namespace irsmatch {

// Floor applied to a pair's QoS cost so that every preference ratio stays
// finite even when min-max normalization yields exactly zero.
inline constexpr double kCostFloor = 1e-6;

// Budget (and time/energy aggregation) semantics: charge each matched pair,
// or charge each selected countermeasure once.
enum class BudgetSemantics { kPerPair, kPerCountermeasure };

struct UtilityConfig {
  // When false, a degenerate range (x_max == x_min) raises InputError instead
  // of clamping the normalized value.
  bool clamp_degenerate_range = true;
};

// Normalized beta-weighted QoS cost of applying countermeasure c against
// attack a. Strictly positive (floored at kCostFloor).
double qos_cost_of_pair(int a, int c, const Scenario& s, const UtilityConfig& cfg = {});

// Node-weighted relative risk reduction; analytically equal to delta/R_a.
double security_utility_of_pair(int a, int c, const Scenario& s, const DerivedIndex& idx);

// Joint security-vs-QoS utility of a single countermeasure: its share of the
// network-wide weighted risk over its raw beta-weighted cost. Reporting only.
double joint_utility(int c, const Scenario& s, const DerivedIndex& idx);

// Both sides' strictly ranked preference lists plus cached per-edge values.
// Edge values are indexed c * A + a; non-edges hold NaN.
struct PreferenceProfile {
  int n_attacks = 0;
  int n_countermeasures = 0;
  std::vector<std::vector<int>> attack_prefs;   // ascending u_a, ties by id
  std::vector<std::vector<int>> counter_prefs;  // descending u_c, ties by id
  std::vector<double> u_a;
  std::vector<double> u_c;
  std::vector<double> ratio;  // u_c / u_a

  std::size_t key(int c, int a) const {
    return static_cast<std::size_t>(c) * n_attacks + a;
  }
  bool has_edge(int c, int a) const { return !std::isnan(u_a[key(c, a)]); }
  double edge_ratio(int c, int a) const { return ratio[key(c, a)]; }
};

PreferenceProfile build_preferences(const Scenario& s, const DerivedIndex& idx,
                                    const UtilityConfig& cfg = {});

struct Aggregates {
  double total_time = 0.0;
  double total_energy = 0.0;
  double total_money = 0.0;
  double security_utility = 0.0;
  double qos_cost = 0.0;   // sum of normalized pair costs
  double objective = 0.0;  // sum of u_c/u_a ratios over matched pairs
  long long coverage_instances = 0;
};

// match_of_attack[a] is the matched countermeasure id or -1.
Aggregates aggregate(const std::vector<int>& match_of_attack, const Scenario& s,
                     const DerivedIndex& idx, const PreferenceProfile& prefs,
                     BudgetSemantics semantics = BudgetSemantics::kPerPair);

}  // namespace irsmatch
