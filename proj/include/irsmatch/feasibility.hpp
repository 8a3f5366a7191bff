#pragma once

#include <vector>

#include "irsmatch/model.hpp"

namespace irsmatch {

struct FeasibleSet {
  std::vector<int> members;  // ascending countermeasure ids
  long long achievable_coverage = 0;
};

struct FeasibilityConfig {
  int enumeration_cap = 20;  // refuse to enumerate more than 2^cap subsets
  bool minimal_only = false; // drop supersets of feasible sets
};

// Absolute instance threshold: ceil(fraction * total instances).
long long coverage_threshold(double coverage_fraction, const DerivedIndex& idx);

// Distinct (node, attack) instances coverable by the union of the subset's
// coverage sets.
long long achievable_coverage(const std::vector<int>& subset, const DerivedIndex& idx);

// Every non-empty countermeasure subset meeting the threshold, ordered by
// size then lexicographically by member ids. Throws GuardError past the cap.
std::vector<FeasibleSet> enumerate_feasible(const Scenario& s, const DerivedIndex& idx,
                                            const FeasibilityConfig& cfg = {});

}  // namespace irsmatch
