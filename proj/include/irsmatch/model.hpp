#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace irsmatch {

// A protected network asset. alpha weights how much a risk reduction on this
// node is worth; constrained to (0, 1].
struct Node {
  int id = 0;
  double alpha = 1.0;

  friend bool operator==(const Node&, const Node&) = default;
};

// A detected attack type. The risk factor is severity * probability.
struct AttackType {
  int id = 0;
  double severity = 0.0;     // [0, 10]
  double probability = 0.0;  // [0, 1]
  std::vector<int> affected_nodes;  // sorted unique node ids, non-empty

  double risk_factor() const { return severity * probability; }

  friend bool operator==(const AttackType&, const AttackType&) = default;
};

// A remediation class. `covers` maps attack id -> risk reduction achieved when
// this countermeasure is applied against that attack (0 < delta <= R_a).
struct CountermeasureType {
  int id = 0;
  std::map<int, double> covers;
  double t_pre = 0.0;
  double t_dep = 0.0;
  double e_pre = 0.0;
  double e_dep = 0.0;
  double money = 0.0;

  double total_time() const { return t_pre + t_dep; }
  double total_energy() const { return e_pre + e_dep; }

  friend bool operator==(const CountermeasureType&, const CountermeasureType&) = default;
};

struct QosRange {
  double lo = 0.0;
  double hi = 1.0;

  friend bool operator==(const QosRange&, const QosRange&) = default;
};

// QoS dimension order used everywhere a triple appears: time, energy, money.
enum QosDim { kTime = 0, kEnergy = 1, kMoney = 2 };

struct Scenario {
  std::vector<Node> nodes;
  std::vector<AttackType> attacks;
  std::vector<CountermeasureType> countermeasures;
  std::array<double, 3> betas{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  double budget_xi = 1.0;
  double coverage_fraction = 1.0;  // (0, 1]
  std::array<QosRange, 3> qos_range{};

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Violation {
  std::string type;   // "node", "attack", "countermeasure", "scenario"
  int id = -1;
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks every type invariant; violations are returned as data, never thrown.
ValidationReport validate(const Scenario& s);

// Coverage index derived from a validated scenario. All lists are sorted by id.
struct DerivedIndex {
  std::vector<std::vector<int>> l_of_a;  // attack -> countermeasures that cover it
  std::vector<std::vector<int>> w_of_c;  // countermeasure -> attacks it addresses
  std::vector<std::vector<std::pair<int, int>>> v_of_c;  // countermeasure -> (node, attack)
  std::vector<long long> n_a;            // attack -> number of affected nodes
  long long total_instances = 0;         // sum over attacks of n_a
  std::vector<double> rf;                // attack -> risk factor
  std::vector<double> alpha_sum;         // attack -> sum of alpha over affected nodes
  double weighted_rf_total = 0.0;        // sum over attacks of alpha_sum * rf

  bool covers(int c, int a) const;
  int n_attacks() const { return static_cast<int>(l_of_a.size()); }
  int n_countermeasures() const { return static_cast<int>(w_of_c.size()); }
};

// Pure; throws InputError if validate(s) reports violations.
DerivedIndex build_index(const Scenario& s);

}  // namespace irsmatch
