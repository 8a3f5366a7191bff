#include "irsmatch/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "irsmatch/errors.hpp"

namespace irsmatch {

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(match_of_attack.size()); ++a)
    if (match_of_attack[a] >= 0) out.emplace_back(a, match_of_attack[a]);
  return out;
}

PreferenceProfile restrict_preferences(const PreferenceProfile& prefs,
                                       const std::vector<int>& members) {
  PreferenceProfile r = prefs;
  std::vector<char> is_member(prefs.n_countermeasures, 0);
  for (int c : members) is_member[c] = 1;
  for (auto& list : r.attack_prefs) {
    std::erase_if(list, [&](int c) { return !is_member[c]; });
  }
  for (int c = 0; c < r.n_countermeasures; ++c) {
    if (!is_member[c]) r.counter_prefs[c].clear();
  }
  return r;
}

Matching run_asm(const FeasibleSet& set, const PreferenceProfile& restricted,
                 const DerivedIndex& idx, long long m_bar_abs, int start) {
  const int A = restricted.n_attacks;
  Matching m;
  m.match_of_attack.assign(A, -1);
  m.start = start;
  m.variant = Variant::kAsm;
  m.feasible_members = set.members;

  for (int i = 0; i < A && m.covered_instances < m_bar_abs; ++i) {
    const int a = (start + i) % A;
    const auto& list = restricted.attack_prefs[a];
    if (list.empty()) continue;
    m.match_of_attack[a] = list.front();
    m.covered_instances += idx.n_a[a];
    ++m.proposal_steps;
  }
  if (m.covered_instances < m_bar_abs)
    throw std::logic_error("run_asm: feasible set failed to reach the coverage threshold");
  return m;
}

Matching run_csm(const FeasibleSet& set, const PreferenceProfile& restricted,
                 const DerivedIndex& idx, long long m_bar_abs, int start) {
  const int A = restricted.n_attacks;
  const int C = restricted.n_countermeasures;
  const int n_members = static_cast<int>(set.members.size());
  Matching m;
  m.match_of_attack.assign(A, -1);
  m.start = start;
  m.variant = Variant::kCsm;
  m.feasible_members = set.members;

  // Each countermeasure proposes down its list exactly once; `deleted` marks
  // attacks removed from a countermeasure's list by successor deletion.
  std::vector<std::size_t> next(C, 0);
  std::vector<std::vector<char>> deleted(C, std::vector<char>(A, 0));

  auto rank = [&](int a, int c) {
    const auto& list = restricted.attack_prefs[a];
    return std::find(list.begin(), list.end(), c) - list.begin();
  };
  // Marks everything strictly after c on a's list as deleted, so those
  // countermeasures skip a when their pointers reach it.
  auto delete_successors = [&](int a, int c) {
    const auto& list = restricted.attack_prefs[a];
    auto it = std::find(list.begin(), list.end(), c);
    for (++it; it != list.end(); ++it) deleted[*it][a] = 1;
  };

  // Stop dead at the threshold only when the set could overshoot it. When the
  // threshold demands everything the set can cover (full coverage in
  // particular), the proposals run to exhaustion: that is the classical
  // deferred-acceptance outcome, and what makes full-coverage runs stable.
  const bool stop_at_threshold = m_bar_abs < set.achievable_coverage;

  bool done = stop_at_threshold && m.covered_instances >= m_bar_abs;
  while (!done) {
    bool any_proposal = false;
    for (int j = 0; j < n_members && !done; ++j) {
      const int c = set.members[(start + j) % n_members];
      const auto& list = restricted.counter_prefs[c];
      while (next[c] < list.size() && deleted[c][list[next[c]]]) ++next[c];
      if (next[c] >= list.size()) continue;
      const int a = list[next[c]++];
      any_proposal = true;
      ++m.proposal_steps;

      const int current = m.match_of_attack[a];
      if (current == -1) {
        m.match_of_attack[a] = c;
        m.covered_instances += idx.n_a[a];
        delete_successors(a, c);
        if (stop_at_threshold && m.covered_instances >= m_bar_abs) done = true;
      } else if (rank(a, c) < rank(a, current)) {
        m.match_of_attack[a] = c;
        delete_successors(a, c);
      }
      // A proposal to an attack holding a preferred partner cannot happen:
      // that pair was marked deleted when the partner was accepted.
    }
    if (!any_proposal) break;
  }

  if (m.covered_instances < m_bar_abs)
    throw std::logic_error("run_csm: feasible set failed to reach the coverage threshold");
  return m;
}

std::vector<BlockingPair> blocking_pairs(const Matching& m, const PreferenceProfile& prefs,
                                         const std::vector<int>& quotas) {
  const int A = prefs.n_attacks;
  std::vector<std::vector<int>> matched_of_c(prefs.n_countermeasures);
  for (int a = 0; a < A; ++a)
    if (m.match_of_attack[a] >= 0) matched_of_c[m.match_of_attack[a]].push_back(a);

  std::vector<BlockingPair> blocks;
  for (int a = 0; a < A; ++a) {
    const auto& list = prefs.attack_prefs[a];
    const int current = m.match_of_attack[a];
    const auto current_rank =
        current < 0 ? list.size()
                    : static_cast<std::size_t>(
                          std::find(list.begin(), list.end(), current) - list.begin());
    for (std::size_t r = 0; r < list.size() && r < current_rank; ++r) {
      const int c = list[r];
      if (c == current) continue;
      // Condition 1 (mutual acceptability) holds: coverage edges only.
      // Condition 2 holds: c strictly precedes a's current match (or a is free).
      const double uc = prefs.u_c[prefs.key(c, a)];
      if (static_cast<int>(matched_of_c[c].size()) < quotas[c] && uc > 0.0) {
        blocks.push_back({a, c, 3});
        continue;
      }
      const auto& c_order = prefs.counter_prefs[c];
      const auto rank_of = [&](int x) {
        return std::find(c_order.begin(), c_order.end(), x) - c_order.begin();
      };
      const auto a_rank = rank_of(a);
      for (int other : matched_of_c[c]) {
        if (a_rank < rank_of(other)) {
          blocks.push_back({a, c, 4});
          break;
        }
      }
    }
  }
  return blocks;
}

Solution solve(const Scenario& s, Variant variant, const SolveConfig& cfg) {
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const auto feasible = enumerate_feasible(s, idx, cfg.feasibility);
  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);

  Solution best;
  auto consider = [&](Matching&& cand, int set_index) {
    ++best.candidates_considered;
    Aggregates agg = aggregate(cand.match_of_attack, s, idx, prefs, cfg.semantics);
    if (!within_budget(agg.total_money, s.budget_xi)) return;
    if (best.feasible) {
      const double d_obj = agg.objective - best.aggregates.objective;
      if (d_obj < -1e-12) return;
      if (d_obj <= 1e-12) {
        const double d_money = agg.total_money - best.aggregates.total_money;
        if (d_money > 1e-12) return;
        if (d_money >= -1e-12 && !(cand.pairs() < best.matching.pairs())) return;
      }
    }
    best.feasible = true;
    best.matching = std::move(cand);
    best.aggregates = agg;
    best.feasible_set_index = set_index;
  };

  for (int i = 0; i < static_cast<int>(feasible.size()); ++i) {
    const FeasibleSet& set = feasible[i];
    const PreferenceProfile restricted = restrict_preferences(prefs, set.members);
    const int n_starts =
        cfg.all_starts
            ? (variant == Variant::kAsm ? prefs.n_attacks : static_cast<int>(set.members.size()))
            : 1;
    for (int k = 0; k < n_starts; ++k) {
      const int start = cfg.all_starts ? k : cfg.start;
      Matching cand = variant == Variant::kAsm
                          ? run_asm(set, restricted, idx, m_bar, start)
                          : run_csm(set, restricted, idx, m_bar, start);
      consider(std::move(cand), i);
    }
  }
  return best;
}

}  // namespace irsmatch
