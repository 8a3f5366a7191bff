#include "irsmatch/utility.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "irsmatch/errors.hpp"

namespace irsmatch {

namespace {

double normalize(double x, const QosRange& r, bool clamp_degenerate) {
  if (r.hi == r.lo) {
    if (!clamp_degenerate)
      throw InputError("degenerate QoS range with clamping disabled");
    return 0.0;
  }
  double v = (x - r.lo) / (r.hi - r.lo);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double qos_cost_of_pair(int a, int c, const Scenario& s, const UtilityConfig& cfg) {
  (void)a;  // cost depends only on the countermeasure; kept in the signature
            // because the pair is the modeled unit.
  const CountermeasureType& cm = s.countermeasures[c];
  const double t = normalize(cm.total_time(), s.qos_range[kTime], cfg.clamp_degenerate_range);
  const double e = normalize(cm.total_energy(), s.qos_range[kEnergy], cfg.clamp_degenerate_range);
  const double m = normalize(cm.money, s.qos_range[kMoney], cfg.clamp_degenerate_range);
  const double cost = s.betas[0] * t + s.betas[1] * e + s.betas[2] * m;
  return cost > 0.0 ? cost : kCostFloor;
}

double security_utility_of_pair(int a, int c, const Scenario& s, const DerivedIndex& idx) {
  const auto it = s.countermeasures[c].covers.find(a);
  if (it == s.countermeasures[c].covers.end())
    throw InputError("security_utility_of_pair: no coverage edge");
  const double denom = idx.alpha_sum[a] * idx.rf[a];
  if (denom <= 0.0) throw InputError("security_utility_of_pair: zero risk factor");
  return idx.alpha_sum[a] * it->second / denom;
}

double joint_utility(int c, const Scenario& s, const DerivedIndex& idx) {
  const CountermeasureType& cm = s.countermeasures[c];
  if (cm.covers.empty()) throw InputError("joint_utility: countermeasure covers nothing");
  double num = 0.0;
  for (const auto& [a, delta] : cm.covers) num += idx.alpha_sum[a] * delta;
  if (idx.weighted_rf_total <= 0.0) throw InputError("joint_utility: zero total weighted risk");
  const double sec = num / idx.weighted_rf_total;
  const double denom = s.betas[0] * cm.total_time() + s.betas[1] * cm.total_energy() +
                       s.betas[2] * cm.money;
  if (denom == 0.0) throw InputError("joint_utility: all raw QoS costs are zero");
  return sec / denom;
}

PreferenceProfile build_preferences(const Scenario& s, const DerivedIndex& idx,
                                    const UtilityConfig& cfg) {
  PreferenceProfile p;
  p.n_attacks = idx.n_attacks();
  p.n_countermeasures = idx.n_countermeasures();
  const std::size_t n_edges_slots =
      static_cast<std::size_t>(p.n_attacks) * p.n_countermeasures;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  p.u_a.assign(n_edges_slots, nan);
  p.u_c.assign(n_edges_slots, nan);
  p.ratio.assign(n_edges_slots, nan);

  for (int c = 0; c < p.n_countermeasures; ++c) {
    for (int a : idx.w_of_c[c]) {
      const std::size_t k = p.key(c, a);
      p.u_a[k] = qos_cost_of_pair(a, c, s, cfg);
      p.u_c[k] = security_utility_of_pair(a, c, s, idx);
      p.ratio[k] = p.u_c[k] / p.u_a[k];
    }
  }

  p.attack_prefs.resize(p.n_attacks);
  for (int a = 0; a < p.n_attacks; ++a) {
    auto list = idx.l_of_a[a];
    std::stable_sort(list.begin(), list.end(), [&](int c1, int c2) {
      const double v1 = p.u_a[p.key(c1, a)], v2 = p.u_a[p.key(c2, a)];
      if (v1 != v2) return v1 < v2;
      return c1 < c2;
    });
    p.attack_prefs[a] = std::move(list);
  }

  p.counter_prefs.resize(p.n_countermeasures);
  for (int c = 0; c < p.n_countermeasures; ++c) {
    auto list = idx.w_of_c[c];
    std::stable_sort(list.begin(), list.end(), [&](int a1, int a2) {
      const double v1 = p.u_c[p.key(c, a1)], v2 = p.u_c[p.key(c, a2)];
      if (v1 != v2) return v1 > v2;
      return a1 < a2;
    });
    p.counter_prefs[c] = std::move(list);
  }

  return p;
}

Aggregates aggregate(const std::vector<int>& match_of_attack, const Scenario& s,
                     const DerivedIndex& idx, const PreferenceProfile& prefs,
                     BudgetSemantics semantics) {
  Aggregates agg;
  double sec_num = 0.0;
  std::set<int> used;
  for (int a = 0; a < static_cast<int>(match_of_attack.size()); ++a) {
    const int c = match_of_attack[a];
    if (c < 0) continue;
    const std::size_t k = prefs.key(c, a);
    agg.objective += prefs.ratio[k];
    agg.qos_cost += prefs.u_a[k];
    agg.coverage_instances += idx.n_a[a];
    sec_num += idx.alpha_sum[a] * s.countermeasures[c].covers.at(a);
    if (semantics == BudgetSemantics::kPerPair) {
      agg.total_time += s.countermeasures[c].total_time();
      agg.total_energy += s.countermeasures[c].total_energy();
      agg.total_money += s.countermeasures[c].money;
    } else {
      used.insert(c);
    }
  }
  if (semantics == BudgetSemantics::kPerCountermeasure) {
    for (int c : used) {
      agg.total_time += s.countermeasures[c].total_time();
      agg.total_energy += s.countermeasures[c].total_energy();
      agg.total_money += s.countermeasures[c].money;
    }
  }
  if (idx.weighted_rf_total > 0.0) agg.security_utility = sec_num / idx.weighted_rf_total;
  return agg;
}

}  // namespace irsmatch
