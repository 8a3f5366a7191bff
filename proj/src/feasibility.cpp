#include "irsmatch/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "irsmatch/errors.hpp"

namespace irsmatch {

long long coverage_threshold(double coverage_fraction, const DerivedIndex& idx) {
  return static_cast<long long>(
      std::ceil(coverage_fraction * static_cast<double>(idx.total_instances) - 1e-9));
}

namespace {

// Attack bitmask per countermeasure; coverage is uniform across an attack's
// affected nodes, so the instance union reduces to a union over attack ids.
std::vector<std::uint64_t> attack_masks(const DerivedIndex& idx) {
  std::vector<std::uint64_t> masks(idx.n_countermeasures(), 0);
  for (int c = 0; c < idx.n_countermeasures(); ++c)
    for (int a : idx.w_of_c[c]) masks[c] |= std::uint64_t{1} << a;
  return masks;
}

long long coverage_of_mask(std::uint64_t attack_union, const DerivedIndex& idx) {
  long long covered = 0;
  while (attack_union) {
    const int a = std::countr_zero(attack_union);
    covered += idx.n_a[a];
    attack_union &= attack_union - 1;
  }
  return covered;
}

}  // namespace

long long achievable_coverage(const std::vector<int>& subset, const DerivedIndex& idx) {
  if (idx.n_attacks() <= 64) {
    std::uint64_t u = 0;
    for (int c : subset)
      for (int a : idx.w_of_c[c]) u |= std::uint64_t{1} << a;
    return coverage_of_mask(u, idx);
  }
  std::vector<char> covered(idx.n_attacks(), 0);
  for (int c : subset)
    for (int a : idx.w_of_c[c]) covered[a] = 1;
  long long total = 0;
  for (int a = 0; a < idx.n_attacks(); ++a)
    if (covered[a]) total += idx.n_a[a];
  return total;
}

std::vector<FeasibleSet> enumerate_feasible(const Scenario& s, const DerivedIndex& idx,
                                            const FeasibilityConfig& cfg) {
  const int C = idx.n_countermeasures();
  if (C > cfg.enumeration_cap)
    throw GuardError("feasible-set enumeration over " + std::to_string(C) +
                     " countermeasures would scan 2^" + std::to_string(C) + " subsets");
  if (idx.n_attacks() > 64)
    throw GuardError("feasible-set enumeration supports at most 64 attack types");

  const long long m_bar = coverage_threshold(s.coverage_fraction, idx);
  const auto masks = attack_masks(idx);

  const std::uint32_t n_subsets = std::uint32_t{1} << C;
  std::vector<std::uint64_t> union_mask(n_subsets, 0);
  std::vector<std::uint32_t> feasible_subsets;
  for (std::uint32_t m = 1; m < n_subsets; ++m) {
    const int low = std::countr_zero(m);
    union_mask[m] = union_mask[m & (m - 1)] | masks[low];
    if (coverage_of_mask(union_mask[m], idx) >= m_bar) feasible_subsets.push_back(m);
  }

  if (cfg.minimal_only) {
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t m : feasible_subsets) {
      bool has_feasible_proper_subset = false;
      for (std::uint32_t sub = (m - 1) & m; sub; sub = (sub - 1) & m) {
        if (coverage_of_mask(union_mask[sub], idx) >= m_bar) {
          has_feasible_proper_subset = true;
          break;
        }
      }
      if (!has_feasible_proper_subset) minimal.push_back(m);
    }
    feasible_subsets = std::move(minimal);
  }

  std::vector<FeasibleSet> out;
  out.reserve(feasible_subsets.size());
  for (std::uint32_t m : feasible_subsets) {
    FeasibleSet fs;
    for (std::uint32_t b = m; b; b &= b - 1) fs.members.push_back(std::countr_zero(b));
    fs.achievable_coverage = coverage_of_mask(union_mask[m], idx);
    out.push_back(std::move(fs));
  }
  std::sort(out.begin(), out.end(), [](const FeasibleSet& x, const FeasibleSet& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

}  // namespace irsmatch
