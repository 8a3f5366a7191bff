#include "irsmatch/pareto.hpp"

#include <algorithm>

#include "irsmatch/feasibility.hpp"

namespace irsmatch {

std::vector<SolutionPoint> multi_start(const Scenario& s, const DerivedIndex& idx,
                                       const PreferenceProfile& prefs, Variant variant,
                                       const FeasibleSet& set, int set_id,
                                       BudgetSemantics semantics) {
  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
  const PreferenceProfile restricted = restrict_preferences(prefs, set.members);
  const int n_starts = variant == Variant::kAsm ? prefs.n_attacks
                                                : static_cast<int>(set.members.size());

  std::vector<SolutionPoint> points;
  std::vector<std::vector<int>> seen;
  for (int start = 0; start < n_starts; ++start) {
    Matching m = variant == Variant::kAsm ? run_asm(set, restricted, idx, m_bar, start)
                                          : run_csm(set, restricted, idx, m_bar, start);
    if (std::find(seen.begin(), seen.end(), m.match_of_attack) != seen.end()) continue;
    seen.push_back(m.match_of_attack);

    const Aggregates agg = aggregate(m.match_of_attack, s, idx, prefs, semantics);
    if (!within_budget(agg.total_money, s.budget_xi)) continue;

    SolutionPoint p;
    p.qos_cost = agg.qos_cost;
    p.security_utility = agg.security_utility;
    p.money_spent = agg.total_money;
    p.objective = agg.objective;
    p.start = start;
    p.variant = variant;
    p.feasible_set_id = set_id;
    p.match_of_attack = std::move(m.match_of_attack);
    points.push_back(std::move(p));
  }
  return points;
}

bool dominates(const SolutionPoint& p1, const SolutionPoint& p2) {
  constexpr double tol = 1e-12;
  const bool no_worse =
      p1.qos_cost <= p2.qos_cost + tol && p1.security_utility >= p2.security_utility - tol;
  const bool strictly_better = p1.qos_cost < p2.qos_cost - tol ||
                               p1.security_utility > p2.security_utility + tol;
  return no_worse && strictly_better;
}

std::vector<SolutionPoint> pareto_front(const std::vector<SolutionPoint>& points) {
  std::vector<SolutionPoint> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j)
      if (j != i && dominates(points[j], points[i])) dominated = true;
    if (!dominated) front.push_back(points[i]);
  }
  std::stable_sort(front.begin(), front.end(), [](const SolutionPoint& a, const SolutionPoint& b) {
    if (a.security_utility != b.security_utility) return a.security_utility > b.security_utility;
    return a.qos_cost < b.qos_cost;
  });
  return front;
}

}  // namespace irsmatch
