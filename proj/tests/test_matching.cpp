#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "irsmatch/matching.hpp"
#include "irsmatch/scenario_io.hpp"

using namespace irsmatch;

namespace {

// Quota of a countermeasure inside a (possibly restricted) preference game:
// the length of its own acceptability list.
std::vector<int> quotas_of(const PreferenceProfile& prefs) {
  std::vector<int> q(prefs.n_countermeasures, 0);
  for (int c = 0; c < prefs.n_countermeasures; ++c)
    q[c] = static_cast<int>(prefs.counter_prefs[c].size());
  return q;
}

}  // namespace

TEST_CASE("restrict_preferences filters both sides") {
  const Scenario s = testing::tiny();
  const PreferenceProfile prefs = build_preferences(s, build_index(s));
  const PreferenceProfile r = restrict_preferences(prefs, {1});
  CHECK(r.attack_prefs[0] == std::vector<int>{1});
  CHECK(r.attack_prefs[1] == std::vector<int>{1});
  CHECK(r.counter_prefs[0].empty());
  CHECK(r.counter_prefs[1] == std::vector<int>{1, 0});
}

TEST_CASE("attack-oriented solver on the tiny fixture") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const FeasibleSet both{{0, 1}, 3};
  const PreferenceProfile r = restrict_preferences(prefs, both.members);

  SUBCASE("every start gives first choices at full coverage") {
    for (int start = 0; start < 2; ++start) {
      const Matching m = run_asm(both, r, idx, 3, start);
      CHECK(m.match_of_attack == std::vector<int>{0, 1});
      CHECK(m.covered_instances == 3);
      CHECK(m.proposal_steps <= 2 * 2);
    }
  }
  SUBCASE("stops once the threshold is met") {
    const Matching m = run_asm(both, r, idx, 2, 0);  // a0 alone covers 2
    CHECK(m.match_of_attack == std::vector<int>{0, -1});
    const Matching m1 = run_asm(both, r, idx, 2, 1);  // a1 first, then a0
    CHECK(m1.match_of_attack == std::vector<int>{0, 1});
  }
  SUBCASE("single-member set funnels everyone to it") {
    const FeasibleSet only1{{1}, 3};
    const PreferenceProfile r1 = restrict_preferences(prefs, only1.members);
    const Matching m = run_asm(only1, r1, idx, 3, 0);
    CHECK(m.match_of_attack == std::vector<int>{1, 1});
  }
}

TEST_CASE("countermeasure-oriented solver on the tiny fixture") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const FeasibleSet both{{0, 1}, 3};
  const PreferenceProfile r = restrict_preferences(prefs, both.members);

  // Round 0: c0 proposes to a0, c1 proposes to a1; both accepted, coverage 3.
  for (int start = 0; start < 2; ++start) {
    const Matching m = run_csm(both, r, idx, 3, start);
    CHECK(m.match_of_attack == std::vector<int>{0, 1});
    CHECK(m.covered_instances == 3);
  }
}

TEST_CASE("displacement hands the attack to its preferred proposer") {
  // Make c1 the cheapest option so a0 prefers c1 over c0.
  Scenario s = testing::tiny();
  s.countermeasures[1].t_pre = s.countermeasures[1].t_dep = 0.05;
  s.countermeasures[1].e_pre = s.countermeasures[1].e_dep = 0.05;
  s.countermeasures[1].money = 0.1;
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const FeasibleSet both{{0, 1}, 3};
  const PreferenceProfile r = restrict_preferences(prefs, both.members);

  // Full coverage: round 0 matches (a0,c0) and (a1,c1); in round 1 c1
  // proposes to a0, which displaces c0 because a0 strictly prefers c1.
  const Matching m0 = run_csm(both, r, idx, 3, 0);
  CHECK(m0.match_of_attack == std::vector<int>{1, 1});
  CHECK(blocking_pairs(m0, r, {1, 2}).empty());

  // Partial threshold: the run stops as soon as a0 alone covers 2 instances.
  const Matching m1 = run_csm(both, r, idx, 2, 0);
  CHECK(m1.match_of_attack == std::vector<int>{0, -1});
  CHECK(m1.covered_instances == 2);
}

TEST_CASE("blocking pair detection on hand cases") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);
  const PreferenceProfile prefs = build_preferences(s, idx);
  const std::vector<int> q = quotas_of(prefs);  // q_c0 = 1, q_c1 = 2

  SUBCASE("the first-choice matching is stable") {
    Matching m;
    m.match_of_attack = {0, 1};
    CHECK(blocking_pairs(m, prefs, q).empty());
  }
  SUBCASE("an idle acceptable countermeasure blocks (condition 3)") {
    Matching m;
    m.match_of_attack = {1, 1};  // a0 settles for its second choice
    const auto blocks = blocking_pairs(m, prefs, q);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].attack == 0);
    CHECK(blocks[0].countermeasure == 0);
    CHECK(blocks[0].condition == 3);
  }
  SUBCASE("an unmatched attack blocks with an under-quota countermeasure") {
    Matching m;
    m.match_of_attack = {1, -1};
    const auto blocks = blocking_pairs(m, prefs, q);
    bool found = false;
    for (const auto& b : blocks) found = found || (b.attack == 1 && b.countermeasure == 1);
    CHECK(found);
  }
  SUBCASE("a full countermeasure blocks via displacement (condition 4)") {
    Matching m;
    m.match_of_attack = {1, -1};  // c1 holds a0, its least preferred
    const auto blocks = blocking_pairs(m, prefs, {1, 1});
    bool found = false;
    for (const auto& b : blocks)
      found = found || (b.attack == 1 && b.countermeasure == 1 && b.condition == 4);
    CHECK(found);
  }
}

TEST_CASE("both solvers emit stable matchings on random full-coverage scenarios") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams p;
    p.n_nodes = 8;
    p.n_attacks = 3 + static_cast<int>(seed % 6);
    p.n_countermeasures = 2 + static_cast<int>(seed % 4);
    p.budget_xi = 1e9;
    p.seed = seed;
    const Scenario s = generate(p);
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    const auto sets = enumerate_feasible(s, idx);
    const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
    for (const auto& set : sets) {
      const PreferenceProfile r = restrict_preferences(prefs, set.members);
      const std::vector<int> q = quotas_of(r);
      for (Variant v : {Variant::kAsm, Variant::kCsm}) {
        const Matching m = v == Variant::kAsm ? run_asm(set, r, idx, m_bar, 0)
                                              : run_csm(set, r, idx, m_bar, 0);
        CHECK(blocking_pairs(m, r, q).empty());
      }
    }
  }
}

TEST_CASE("solver outputs satisfy the matching criteria on random scenarios") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams p;
    p.n_nodes = 8;
    p.n_attacks = 3 + static_cast<int>(seed % 6);
    p.n_countermeasures = 2 + static_cast<int>(seed % 4);
    p.coverage_fraction = 0.5 + 0.1 * static_cast<double>(seed % 6);
    p.budget_xi = 1e9;
    p.seed = seed;
    const Scenario s = generate(p);
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    const auto sets = enumerate_feasible(s, idx);
    const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
    for (const auto& set : sets) {
      const PreferenceProfile r = restrict_preferences(prefs, set.members);
      for (Variant v : {Variant::kAsm, Variant::kCsm}) {
        for (int start = 0; start < 2; ++start) {
          const Matching m = v == Variant::kAsm ? run_asm(set, r, idx, m_bar, start)
                                                : run_csm(set, r, idx, m_bar, start);
          // Coverage threshold met; matched edges are real coverage edges;
          // every used countermeasure belongs to the set; capacity respected.
          long long cov = 0;
          std::vector<int> load(idx.n_countermeasures(), 0);
          for (int a = 0; a < idx.n_attacks(); ++a) {
            const int c = m.match_of_attack[a];
            if (c < 0) continue;
            CHECK(idx.covers(c, a));
            bool member = false;
            for (int mc : set.members) member = member || mc == c;
            CHECK(member);
            cov += idx.n_a[a];
            ++load[c];
          }
          CHECK(cov == m.covered_instances);
          CHECK(cov >= m_bar);
          for (int c = 0; c < idx.n_countermeasures(); ++c)
            CHECK(load[c] <= static_cast<int>(r.counter_prefs[c].size()));
          CHECK(m.proposal_steps <=
                static_cast<long long>(idx.n_countermeasures()) * idx.n_attacks());
        }
      }
    }
  }
}

TEST_CASE("attack-oriented runs are start-invariant at full coverage") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorParams p;
    p.n_nodes = 8;
    p.n_attacks = 5;
    p.n_countermeasures = 3;
    p.budget_xi = 1e9;
    p.seed = seed;
    const Scenario s = generate(p);
    const DerivedIndex idx = build_index(s);
    const PreferenceProfile prefs = build_preferences(s, idx);
    const auto sets = enumerate_feasible(s, idx);
    const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
    for (const auto& set : sets) {
      const PreferenceProfile r = restrict_preferences(prefs, set.members);
      const Matching base = run_asm(set, r, idx, m_bar, 0);
      for (int start = 1; start < idx.n_attacks(); ++start)
        CHECK(run_asm(set, r, idx, m_bar, start) == base);
    }
  }
}

TEST_CASE("end-to-end selection on the tiny fixture") {
  Scenario s = testing::tiny();

  SUBCASE("generous budget picks the first-choice matching") {
    const Solution sol = solve(s, Variant::kAsm);
    REQUIRE(sol.feasible);
    CHECK(sol.matching.match_of_attack == std::vector<int>{0, 1});
    CHECK(sol.aggregates.objective ==
          doctest::Approx(testing::kTinyBestObjective).epsilon(1e-12));
    CHECK(sol.aggregates.total_money == doctest::Approx(0.7));

    const Solution csm = solve(s, Variant::kCsm);
    REQUIRE(csm.feasible);
    CHECK(csm.matching.match_of_attack == std::vector<int>{0, 1});
  }
  SUBCASE("tighter budget still admits the cheaper pairing") {
    s.budget_xi = 0.75;  // {c0,c1} costs 0.7 < 0.75; {c1,c1} costs 0.8
    const Solution sol = solve(s, Variant::kAsm, {.all_starts = true});
    REQUIRE(sol.feasible);
    CHECK(sol.aggregates.total_money == doctest::Approx(0.7));
  }
  SUBCASE("budget below every candidate is infeasible, not an error") {
    s.budget_xi = 0.1;
    const Solution sol = solve(s, Variant::kAsm, {.all_starts = true});
    CHECK_FALSE(sol.feasible);
    CHECK(sol.candidates_considered > 0);
  }
  SUBCASE("budget boundary is strict") {
    s.budget_xi = 0.7;  // cost 0.7 is not strictly below 0.7
    const Solution sol = solve(s, Variant::kAsm, {.all_starts = true});
    CHECK_FALSE(sol.feasible);
  }
  SUBCASE("per-countermeasure semantics charges each type once") {
    s.budget_xi = 0.45;
    SolveConfig cfg;
    cfg.semantics = BudgetSemantics::kPerCountermeasure;
    cfg.all_starts = true;
    const Solution sol = solve(s, Variant::kAsm, cfg);
    REQUIRE(sol.feasible);  // {c1,c1} costs 0.4 once
    CHECK(sol.matching.match_of_attack == std::vector<int>{1, 1});
    CHECK(sol.aggregates.total_money == doctest::Approx(0.4));
  }
}

TEST_CASE("solve explores all starts when asked") {
  GeneratorParams p;
  p.n_nodes = 8;
  p.n_attacks = 6;
  p.n_countermeasures = 3;
  p.budget_xi = 1e9;
  p.seed = 11;
  const Scenario s = generate(p);
  const Solution one = solve(s, Variant::kCsm);
  const Solution all = solve(s, Variant::kCsm, {.all_starts = true});
  CHECK(all.candidates_considered >= one.candidates_considered);
  CHECK(all.aggregates.objective >= one.aggregates.objective - 1e-12);
}
