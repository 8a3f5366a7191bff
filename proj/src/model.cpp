#include "irsmatch/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "irsmatch/errors.hpp"

namespace irsmatch {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.type << " " << v.id << " [" << v.field << "]: " << v.message << "\n";
  }
  return os.str();
}

namespace {

void add(ValidationReport& r, std::string type, int id, std::string field, std::string msg) {
  r.violations.push_back({std::move(type), id, std::move(field), std::move(msg)});
}

}  // namespace

ValidationReport validate(const Scenario& s) {
  ValidationReport r;

  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const Node& n = s.nodes[i];
    if (n.id != static_cast<int>(i))
      add(r, "node", n.id, "id", "ids must be dense 0-based and in order");
    if (!(n.alpha > 0.0 && n.alpha <= 1.0))
      add(r, "node", n.id, "alpha", "alpha out of (0,1]");
  }

  const int n_nodes = static_cast<int>(s.nodes.size());
  for (std::size_t i = 0; i < s.attacks.size(); ++i) {
    const AttackType& a = s.attacks[i];
    if (a.id != static_cast<int>(i))
      add(r, "attack", a.id, "id", "ids must be dense 0-based and in order");
    if (!(a.severity >= 0.0 && a.severity <= 10.0))
      add(r, "attack", a.id, "severity", "severity out of [0,10]");
    if (!(a.probability >= 0.0 && a.probability <= 1.0))
      add(r, "attack", a.id, "probability", "probability out of [0,1]");
    if (a.affected_nodes.empty())
      add(r, "attack", a.id, "affected_nodes", "attack must affect at least one node");
    std::set<int> seen;
    for (int n : a.affected_nodes) {
      if (n < 0 || n >= n_nodes)
        add(r, "attack", a.id, "affected_nodes", "unknown node id " + std::to_string(n));
      if (!seen.insert(n).second)
        add(r, "attack", a.id, "affected_nodes", "duplicate node id " + std::to_string(n));
    }
  }

  const int n_attacks = static_cast<int>(s.attacks.size());
  for (std::size_t i = 0; i < s.countermeasures.size(); ++i) {
    const CountermeasureType& c = s.countermeasures[i];
    if (c.id != static_cast<int>(i))
      add(r, "countermeasure", c.id, "id", "ids must be dense 0-based and in order");
    if (c.covers.empty())
      add(r, "countermeasure", c.id, "covers", "countermeasure must cover at least one attack");
    for (const auto& [a, delta] : c.covers) {
      if (a < 0 || a >= n_attacks) {
        add(r, "countermeasure", c.id, "covers", "unknown attack id " + std::to_string(a));
        continue;
      }
      const double rf = s.attacks[a].risk_factor();
      if (rf <= 0.0)
        add(r, "countermeasure", c.id, "covers",
            "covered attack " + std::to_string(a) + " has zero risk factor");
      if (!(delta > 0.0) || delta > rf)
        add(r, "countermeasure", c.id, "covers",
            "risk reduction for attack " + std::to_string(a) + " out of (0, R_a]");
    }
    if (c.t_pre < 0 || c.t_dep < 0 || c.e_pre < 0 || c.e_dep < 0 || c.money < 0)
      add(r, "countermeasure", c.id, "costs", "cost components must be >= 0");
  }

  const double beta_sum = s.betas[0] + s.betas[1] + s.betas[2];
  if (std::abs(beta_sum - 1.0) > 1e-9)
    add(r, "scenario", -1, "betas", "betas must sum to 1");
  for (double b : s.betas) {
    if (b < 0.0) add(r, "scenario", -1, "betas", "beta coefficients must be >= 0");
  }
  if (!(s.budget_xi > 0.0))
    add(r, "scenario", -1, "budget_xi", "budget must be > 0");
  if (!(s.coverage_fraction > 0.0 && s.coverage_fraction <= 1.0))
    add(r, "scenario", -1, "coverage_fraction", "coverage fraction out of (0,1]");
  for (int d = 0; d < 3; ++d) {
    if (s.qos_range[d].hi < s.qos_range[d].lo)
      add(r, "scenario", -1, "qos_range", "x_max < x_min for dimension " + std::to_string(d));
  }

  return r;
}

bool DerivedIndex::covers(int c, int a) const {
  if (c < 0 || c >= n_countermeasures()) return false;
  const auto& w = w_of_c[c];
  return std::binary_search(w.begin(), w.end(), a);
}

DerivedIndex build_index(const Scenario& s) {
  ValidationReport report = validate(s);
  if (!report.ok())
    throw InputError("build_index on invalid scenario:\n" + report.summary());

  DerivedIndex idx;
  const int A = static_cast<int>(s.attacks.size());
  const int C = static_cast<int>(s.countermeasures.size());
  idx.l_of_a.resize(A);
  idx.w_of_c.resize(C);
  idx.v_of_c.resize(C);
  idx.n_a.resize(A);
  idx.rf.resize(A);
  idx.alpha_sum.resize(A);

  for (int a = 0; a < A; ++a) {
    idx.n_a[a] = static_cast<long long>(s.attacks[a].affected_nodes.size());
    idx.total_instances += idx.n_a[a];
    idx.rf[a] = s.attacks[a].risk_factor();
    double sum = 0.0;
    for (int n : s.attacks[a].affected_nodes) sum += s.nodes[n].alpha;
    idx.alpha_sum[a] = sum;
    idx.weighted_rf_total += sum * idx.rf[a];
  }

  for (int c = 0; c < C; ++c) {
    for (const auto& [a, delta] : s.countermeasures[c].covers) {
      (void)delta;
      idx.l_of_a[a].push_back(c);
      idx.w_of_c[c].push_back(a);
      for (int n : s.attacks[a].affected_nodes) idx.v_of_c[c].emplace_back(n, a);
    }
  }
  for (auto& l : idx.l_of_a) std::sort(l.begin(), l.end());
  // w_of_c already ascends: covers is an ordered map.

  return idx;
}

}  // namespace irsmatch
