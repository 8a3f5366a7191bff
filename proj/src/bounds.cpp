#include "irsmatch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "irsmatch/errors.hpp"
#include "irsmatch/feasibility.hpp"
#include "irsmatch/matching.hpp"

namespace irsmatch {

namespace {

std::vector<std::pair<int, int>> pairs_of(const std::vector<int>& match) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(match.size()); ++a)
    if (match[a] >= 0) out.emplace_back(a, match[a]);
  return out;
}

// Shared candidate comparison: objective, then money, then pair list.
bool improves(double obj, double money, const std::vector<int>& match,
              const ExactSolution& best) {
  if (!best.feasible) return true;
  const double d_obj = obj - best.objective;
  if (d_obj > 1e-12) return true;
  if (d_obj < -1e-12) return false;
  const double d_money = money - best.money;
  if (d_money < -1e-12) return true;
  if (d_money > 1e-12) return false;
  return pairs_of(match) < pairs_of(best.match_of_attack);
}

}  // namespace

ExactSolution brute_force(const Scenario& s, const DerivedIndex& idx,
                          const PreferenceProfile& prefs, BudgetSemantics semantics) {
  const int A = idx.n_attacks();
  double combos = 1.0;
  for (int a = 0; a < A; ++a) combos *= static_cast<double>(idx.l_of_a[a].size() + 1);
  if (combos > 1e7)
    throw GuardError("brute_force: " + std::to_string(combos) + " assignments exceed the 1e7 guard");

  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
  ExactSolution best;
  std::vector<int> match(A, -1);
  std::vector<int> use_count(idx.n_countermeasures(), 0);

  double money = 0.0, objective = 0.0;
  long long coverage = 0;

  std::function<void(int)> rec = [&](int a) {
    if (a == A) {
      if (coverage >= m_bar && within_budget(money, s.budget_xi) &&
          improves(objective, money, match, best)) {
        best.feasible = true;
        best.match_of_attack = match;
        best.objective = objective;
        best.money = money;
      }
      return;
    }
    // unmatched branch
    match[a] = -1;
    rec(a + 1);
    for (int c : idx.l_of_a[a]) {
      const double psi = s.countermeasures[c].money;
      double d_money = 0.0;
      if (semantics == BudgetSemantics::kPerPair) {
        d_money = psi;
      } else if (use_count[c] == 0) {
        d_money = psi;
      }
      match[a] = c;
      money += d_money;
      objective += prefs.edge_ratio(c, a);
      coverage += idx.n_a[a];
      ++use_count[c];
      if (within_budget(money, s.budget_xi)) rec(a + 1);
      --use_count[c];
      coverage -= idx.n_a[a];
      objective -= prefs.edge_ratio(c, a);
      money -= d_money;
      match[a] = -1;
    }
  };
  rec(0);
  return best;
}

std::pair<double, std::vector<int>> knapsack_subproblem(int c, const DualVariables& duals,
                                                        const Scenario& s,
                                                        const DerivedIndex& idx,
                                                        const PreferenceProfile& prefs) {
  const double psi = s.countermeasures[c].money;
  const auto& items = idx.w_of_c[c];
  long long capacity;
  if (psi <= 0.0) {
    capacity = static_cast<long long>(items.size());
  } else {
    capacity = static_cast<long long>(std::floor((s.budget_xi - 1e-9) / psi));
  }
  if (capacity <= 0) return {0.0, {}};

  std::vector<std::pair<double, int>> coefs;  // (coefficient, attack)
  coefs.reserve(items.size());
  for (int a : items) {
    const double theta = a < static_cast<int>(duals.theta.size()) ? duals.theta[a] : 0.0;
    const double coef = prefs.edge_ratio(c, a) +
                        duals.rho * static_cast<double>(idx.n_a[a]) + theta;
    if (coef > 0.0) coefs.emplace_back(coef, a);
  }
  std::sort(coefs.begin(), coefs.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  double mu = 0.0;
  std::vector<int> chosen;
  for (std::size_t i = 0; i < coefs.size() && static_cast<long long>(i) < capacity; ++i) {
    mu += coefs[i].first;
    chosen.push_back(coefs[i].second);
  }
  std::sort(chosen.begin(), chosen.end());
  return {mu, chosen};
}

BoundResult lagrangian_bound(const Scenario& s, const DerivedIndex& idx,
                             const PreferenceProfile& prefs, const DualVariables& duals) {
  BoundResult r;
  r.duals = duals;
  r.duals.theta.resize(idx.n_attacks(), 0.0);
  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);

  double total_mu = 0.0;
  for (int c = 0; c < idx.n_countermeasures(); ++c) {
    auto [mu, chosen] = knapsack_subproblem(c, r.duals, s, idx, prefs);
    r.mu.push_back(mu);
    r.relaxed_choice.push_back(std::move(chosen));
    total_mu += mu;
  }
  double theta_sum = 0.0;
  for (double t : r.duals.theta) theta_sum += t;
  r.upper_bound = total_mu - r.duals.rho * static_cast<double>(m_bar) - theta_sum;
  return r;
}

BoundResult optimize_duals(const Scenario& s, const DerivedIndex& idx,
                           const PreferenceProfile& prefs, const DualConfig& cfg) {
  const int A = idx.n_attacks();
  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
  const bool partial = s.coverage_fraction < 1.0;

  DualVariables duals;
  duals.theta.assign(A, 0.0);
  BoundResult best = lagrangian_bound(s, idx, prefs, duals);
  BoundResult current = best;

  for (int k = 1; k <= cfg.max_iter; ++k) {
    // Subgradient at the relaxation's maximizer.
    long long cov = 0;
    std::vector<int> assigned(A, 0);
    for (const auto& chosen : current.relaxed_choice)
      for (int a : chosen) {
        cov += idx.n_a[a];
        ++assigned[a];
      }
    const double cov_sub = static_cast<double>(cov - m_bar);
    const double step = cfg.step0 / std::sqrt(static_cast<double>(k));

    duals.rho = std::max(0.0, duals.rho - step * cov_sub);
    for (int a = 0; a < A; ++a) {
      double g = static_cast<double>(assigned[a]) - 1.0;
      if (partial) g = std::max(0.0, g);  // at-most-one assignment mode
      duals.theta[a] -= step * g;
      if (partial) duals.theta[a] = std::min(0.0, duals.theta[a]);
    }

    current = lagrangian_bound(s, idx, prefs, duals);
    if (current.upper_bound < best.upper_bound) best = current;
  }
  best.iterations = cfg.max_iter;
  return best;
}

ExactSolution branch_and_bound_exact(const Scenario& s, const DerivedIndex& idx,
                                     const PreferenceProfile& prefs, const BbConfig& cfg) {
  const int A = idx.n_attacks();
  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);

  const BoundResult root = optimize_duals(s, idx, prefs, cfg.duals);
  const DualVariables& duals = root.duals;

  // Dualized coefficient per edge, and per-attack optimistic contribution.
  std::vector<double> best_coef(A, 0.0);
  auto coef_of = [&](int c, int a) {
    return prefs.edge_ratio(c, a) + duals.rho * static_cast<double>(idx.n_a[a]) +
           duals.theta[a];
  };
  for (int a = 0; a < A; ++a) {
    double b = 0.0;
    for (int c : idx.l_of_a[a]) b = std::max(b, coef_of(c, a));
    best_coef[a] = b;
  }
  std::vector<double> suffix_best(A + 1, 0.0);
  std::vector<long long> suffix_na(A + 1, 0);
  for (int a = A - 1; a >= 0; --a) {
    suffix_best[a] = suffix_best[a + 1] + best_coef[a];
    suffix_na[a] = suffix_na[a + 1] + idx.n_a[a];
  }
  double theta_sum = 0.0;
  for (double t : duals.theta) theta_sum += t;
  const double dual_constant = -duals.rho * static_cast<double>(m_bar) - theta_sum;

  // Children per attack: covering countermeasures in descending ratio order.
  std::vector<std::vector<int>> children(A);
  for (int a = 0; a < A; ++a) {
    children[a] = idx.l_of_a[a];
    std::sort(children[a].begin(), children[a].end(), [&](int c1, int c2) {
      const double r1 = prefs.edge_ratio(c1, a), r2 = prefs.edge_ratio(c2, a);
      if (r1 != r2) return r1 > r2;
      return c1 < c2;
    });
  }

  ExactSolution best;
  std::vector<int> match(A, -1);
  bool budget_exhausted = false;

  std::function<void(int, double, double, double, long long)> rec =
      [&](int a, double value, double fixed_coef, double money, long long coverage) {
        if (budget_exhausted) return;
        ++best.nodes_explored;
        if (best.nodes_explored > cfg.node_budget) {
          budget_exhausted = true;
          return;
        }
        if (coverage + suffix_na[a] < m_bar) return;
        if (best.feasible &&
            fixed_coef + suffix_best[a] + dual_constant <= best.objective + 1e-9)
          return;
        if (a == A) {
          if (coverage >= m_bar && within_budget(money, s.budget_xi) &&
              improves(value, money, match, best)) {
            best.feasible = true;
            best.match_of_attack = match;
            best.objective = value;
            best.money = money;
          }
          return;
        }
        for (int c : children[a]) {
          const double psi = s.countermeasures[c].money;
          if (!within_budget(money + psi, s.budget_xi)) continue;
          match[a] = c;
          rec(a + 1, value + prefs.edge_ratio(c, a), fixed_coef + coef_of(c, a),
              money + psi, coverage + idx.n_a[a]);
          match[a] = -1;
        }
        rec(a + 1, value, fixed_coef, money, coverage);
      };
  rec(0, 0.0, 0.0, 0.0, 0);

  if (budget_exhausted) {
    best.certified = false;
    best.gap = root.upper_bound - (best.feasible ? best.objective : 0.0);
  }
  return best;
}

}  // namespace irsmatch
