#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "irsmatch/errors.hpp"
#include "irsmatch/feasibility.hpp"
#include "irsmatch/scenario_io.hpp"

using namespace irsmatch;

TEST_CASE("coverage threshold rounds up and resists float noise") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);  // 3 instances
  CHECK(coverage_threshold(1.0, idx) == 3);
  CHECK(coverage_threshold(0.5, idx) == 2);   // ceil(1.5)
  CHECK(coverage_threshold(0.34, idx) == 2);  // ceil(1.02)
  CHECK(coverage_threshold(1.0 / 3.0, idx) == 1);

  GeneratorParams p;
  p.n_nodes = 40;
  p.n_attacks = 10;
  p.n_countermeasures = 4;
  p.seed = 7;
  const DerivedIndex big = build_index(generate(p));
  // 0.8 * total must never ceil one past the exact product.
  const long long t = coverage_threshold(0.8, big);
  CHECK(t * 10 >= big.total_instances * 8);
  CHECK((t - 1) * 10 < big.total_instances * 8);
}

TEST_CASE("achievable coverage counts the union of instance sets") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);
  CHECK(achievable_coverage({0}, idx) == 2);
  CHECK(achievable_coverage({1}, idx) == 3);
  CHECK(achievable_coverage({0, 1}, idx) == 3);  // a0 instances not double-counted
  CHECK(achievable_coverage({}, idx) == 0);
}

TEST_CASE("feasible sets of the tiny fixture") {
  const Scenario s = testing::tiny();
  const DerivedIndex idx = build_index(s);

  SUBCASE("full coverage") {
    const auto sets = enumerate_feasible(s, idx);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].members == std::vector<int>{1});
    CHECK(sets[0].achievable_coverage == 3);
    CHECK(sets[1].members == std::vector<int>{0, 1});
  }
  SUBCASE("partial coverage admits the smaller set") {
    Scenario s2 = s;
    s2.coverage_fraction = 0.6;  // threshold 2
    const auto sets = enumerate_feasible(s2, build_index(s2));
    REQUIRE(sets.size() == 3);
    CHECK(sets[0].members == std::vector<int>{0});
    CHECK(sets[1].members == std::vector<int>{1});
    CHECK(sets[2].members == std::vector<int>{0, 1});
  }
  SUBCASE("minimal sets only") {
    FeasibilityConfig cfg;
    cfg.minimal_only = true;
    const auto sets = enumerate_feasible(s, idx, cfg);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].members == std::vector<int>{1});
  }
}

TEST_CASE("enumeration refuses oversized inputs") {
  GeneratorParams p;
  p.n_nodes = 5;
  p.n_attacks = 3;
  p.n_countermeasures = 6;
  p.seed = 1;
  const Scenario s = generate(p);
  FeasibilityConfig cfg;
  cfg.enumeration_cap = 5;  // 2^6 subsets > 2^5
  CHECK_THROWS_AS(enumerate_feasible(s, build_index(s), cfg), GuardError);
}

namespace {

// Independent oracle: test each subset by rebuilding the instance union from
// scratch, no incremental masks.
std::vector<std::vector<int>> feasible_by_scan(const Scenario& s, const DerivedIndex& idx) {
  const int C = idx.n_countermeasures();
  const long long threshold = coverage_threshold(s.coverage_fraction, idx);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << C); ++mask) {
    std::vector<int> members;
    for (int c = 0; c < C; ++c)
      if (mask & (1u << c)) members.push_back(c);
    if (achievable_coverage(members, idx) >= threshold) out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with the subset-scan oracle on random scenarios") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams p;
    p.n_nodes = 10;
    p.n_attacks = 6;
    p.n_countermeasures = 1 + static_cast<int>(seed % 7);
    p.coverage_fraction = 0.5 + 0.1 * static_cast<double>(seed % 6);
    p.seed = seed;
    const Scenario s = generate(p);
    const DerivedIndex idx = build_index(s);
    const auto sets = enumerate_feasible(s, idx);
    const auto oracle = feasible_by_scan(s, idx);
    REQUIRE(sets.size() == oracle.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      CHECK(sets[i].members == oracle[i]);
      CHECK(sets[i].achievable_coverage == achievable_coverage(oracle[i], idx));
    }
  }
}

TEST_CASE("feasibility is monotone in members and antitone in the threshold") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorParams p;
    p.n_nodes = 10;
    p.n_attacks = 6;
    p.n_countermeasures = 5;
    p.coverage_fraction = 0.8;
    p.seed = seed;
    Scenario s = generate(p);
    const DerivedIndex idx = build_index(s);
    const auto sets = enumerate_feasible(s, idx);

    // Supersets of feasible sets are feasible.
    const long long threshold = coverage_threshold(s.coverage_fraction, idx);
    for (const auto& set : sets) {
      std::vector<int> superset = set.members;
      for (int c = 0; c < idx.n_countermeasures(); ++c)
        if (!std::binary_search(superset.begin(), superset.end(), c)) {
          superset.push_back(c);
          break;
        }
      std::sort(superset.begin(), superset.end());
      CHECK(achievable_coverage(superset, idx) >= threshold);
    }

    // Lowering the fraction can only add feasible sets.
    Scenario relaxed = s;
    relaxed.coverage_fraction = 0.5;
    const auto more = enumerate_feasible(relaxed, build_index(relaxed));
    CHECK(more.size() >= sets.size());
    for (const auto& set : sets) {
      bool present = false;
      for (const auto& other : more) present = present || other.members == set.members;
      CHECK(present);
    }
  }
}
