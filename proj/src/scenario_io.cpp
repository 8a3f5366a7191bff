#include "irsmatch/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "irsmatch/errors.hpp"
#include "irsmatch/rng.hpp"

namespace irsmatch {

using nlohmann::json;

namespace {
constexpr int kSchemaVersion = 1;

void warn_unknown_fields(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.contains(key))
      std::cerr << "warning: ignoring unknown field '" << key << "' in " << where << "\n";
  }
}

}  // namespace

Scenario generate(const GeneratorParams& p) {
  if (p.n_nodes < 1 || p.n_attacks < 1 || p.n_countermeasures < 1)
    throw InputError("generate: node/attack/countermeasure counts must be >= 1");
  if (p.node_density < 0.0 || p.node_density > 1.0 || p.coverage_density < 0.0 ||
      p.coverage_density > 1.0)
    throw InputError("generate: densities must lie in [0,1]");
  if (!(p.coverage_fraction > 0.0 && p.coverage_fraction <= 1.0))
    throw InputError("generate: coverage fraction out of (0,1]");
  if (!(p.budget_xi > 0.0)) throw InputError("generate: budget must be > 0");

  SplitMix64 rng(p.seed);
  Scenario s;
  s.betas = p.betas;
  s.budget_xi = p.budget_xi;
  s.coverage_fraction = p.coverage_fraction;

  // Draw order is fixed; anything that alters it breaks seed reproducibility.
  s.nodes.resize(p.n_nodes);
  for (int n = 0; n < p.n_nodes; ++n) s.nodes[n] = {n, rng.uniform01_open_low()};

  s.attacks.resize(p.n_attacks);
  for (int a = 0; a < p.n_attacks; ++a) {
    // Risk factor sampled in (0,1] and embedded as severity = 10*R, P = 1.
    s.attacks[a].id = a;
    s.attacks[a].severity = 10.0 * rng.uniform01_open_low();
    s.attacks[a].probability = 1.0;
  }
  for (int a = 0; a < p.n_attacks; ++a) {
    auto& affected = s.attacks[a].affected_nodes;
    for (int n = 0; n < p.n_nodes; ++n)
      if (rng.uniform01() < p.node_density) affected.push_back(n);
    if (affected.empty()) affected.push_back(static_cast<int>(rng.below(p.n_nodes)));
  }

  std::vector<std::vector<char>> edge(p.n_countermeasures,
                                      std::vector<char>(p.n_attacks, 0));
  for (int c = 0; c < p.n_countermeasures; ++c)
    for (int a = 0; a < p.n_attacks; ++a)
      if (rng.uniform01() < p.coverage_density) edge[c][a] = 1;
  for (int a = 0; a < p.n_attacks; ++a) {
    bool covered = false;
    for (int c = 0; c < p.n_countermeasures; ++c) covered = covered || edge[c][a];
    if (!covered) edge[rng.below(p.n_countermeasures)][a] = 1;
  }
  for (int c = 0; c < p.n_countermeasures; ++c) {
    if (std::none_of(edge[c].begin(), edge[c].end(), [](char e) { return e != 0; }))
      edge[c][rng.below(p.n_attacks)] = 1;
  }

  s.countermeasures.resize(p.n_countermeasures);
  for (int c = 0; c < p.n_countermeasures; ++c) {
    auto& cm = s.countermeasures[c];
    cm.id = c;
    for (int a = 0; a < p.n_attacks; ++a) {
      if (!edge[c][a]) continue;
      const double ratio = rng.uniform01_open_low();  // (0,1] share of R_a removed
      cm.covers[a] = ratio * s.attacks[a].risk_factor();
    }
    const double t_tot = rng.uniform01();
    const double t_split = rng.uniform01();
    cm.t_pre = t_split * t_tot;
    cm.t_dep = t_tot - cm.t_pre;
    const double e_tot = rng.uniform01();
    const double e_split = rng.uniform01();
    cm.e_pre = e_split * e_tot;
    cm.e_dep = e_tot - cm.e_pre;
    cm.money = rng.uniform01();
  }
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["nodes"] = json::array();
  for (const auto& n : s.nodes) j["nodes"].push_back({{"id", n.id}, {"alpha", n.alpha}});
  j["attacks"] = json::array();
  for (const auto& a : s.attacks)
    j["attacks"].push_back({{"id", a.id},
                            {"severity", a.severity},
                            {"probability", a.probability},
                            {"affected_nodes", a.affected_nodes}});
  j["countermeasures"] = json::array();
  for (const auto& c : s.countermeasures) {
    json covers = json::object();
    for (const auto& [a, delta] : c.covers) covers[std::to_string(a)] = delta;
    j["countermeasures"].push_back({{"id", c.id},
                                    {"covers", covers},
                                    {"t_pre", c.t_pre},
                                    {"t_dep", c.t_dep},
                                    {"e_pre", c.e_pre},
                                    {"e_dep", c.e_dep},
                                    {"money", c.money}});
  }
  j["betas"] = s.betas;
  j["budget_xi"] = s.budget_xi;
  j["coverage_fraction"] = s.coverage_fraction;
  j["qos_range"] = {{"time", {s.qos_range[kTime].lo, s.qos_range[kTime].hi}},
                    {"energy", {s.qos_range[kEnergy].lo, s.qos_range[kEnergy].hi}},
                    {"money", {s.qos_range[kMoney].lo, s.qos_range[kMoney].hi}}};
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario parse error: ") + e.what());
  }
  try {
    if (!j.contains("schema_version"))
      throw InputError("scenario parse error: missing schema_version");
    if (j["schema_version"].get<int>() != kSchemaVersion)
      throw InputError("scenario schema version mismatch: expected " +
                       std::to_string(kSchemaVersion));
    for (const char* section : {"nodes", "attacks", "countermeasures"})
      if (!j.contains(section))
        throw InputError(std::string("scenario parse error: missing section '") + section + "'");

    warn_unknown_fields(j,
                        {"schema_version", "nodes", "attacks", "countermeasures", "betas",
                         "budget_xi", "coverage_fraction", "qos_range"},
                        "scenario");

    Scenario s;
    for (const auto& n : j["nodes"]) {
      warn_unknown_fields(n, {"id", "alpha"}, "node");
      s.nodes.push_back({n.at("id").get<int>(), n.at("alpha").get<double>()});
    }
    for (const auto& a : j["attacks"]) {
      warn_unknown_fields(a, {"id", "severity", "probability", "affected_nodes"}, "attack");
      AttackType at;
      at.id = a.at("id").get<int>();
      at.severity = a.at("severity").get<double>();
      at.probability = a.at("probability").get<double>();
      at.affected_nodes = a.at("affected_nodes").get<std::vector<int>>();
      std::sort(at.affected_nodes.begin(), at.affected_nodes.end());
      s.attacks.push_back(std::move(at));
    }
    for (const auto& c : j["countermeasures"]) {
      warn_unknown_fields(c, {"id", "covers", "t_pre", "t_dep", "e_pre", "e_dep", "money"},
                          "countermeasure");
      CountermeasureType cm;
      cm.id = c.at("id").get<int>();
      for (const auto& [key, delta] : c.at("covers").items())
        cm.covers[std::stoi(key)] = delta.get<double>();
      cm.t_pre = c.at("t_pre").get<double>();
      cm.t_dep = c.at("t_dep").get<double>();
      cm.e_pre = c.at("e_pre").get<double>();
      cm.e_dep = c.at("e_dep").get<double>();
      cm.money = c.at("money").get<double>();
      s.countermeasures.push_back(std::move(cm));
    }
    if (j.contains("betas")) s.betas = j["betas"].get<std::array<double, 3>>();
    if (j.contains("budget_xi")) s.budget_xi = j["budget_xi"].get<double>();
    if (j.contains("coverage_fraction"))
      s.coverage_fraction = j["coverage_fraction"].get<double>();
    if (j.contains("qos_range")) {
      const auto& q = j["qos_range"];
      const char* names[3] = {"time", "energy", "money"};
      for (int d = 0; d < 3; ++d) {
        const auto pair = q.at(names[d]).get<std::array<double, 2>>();
        s.qos_range[d] = {pair[0], pair[1]};
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario parse error: ") + e.what());
  }
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << scenario_to_json(s);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

std::string solution_to_json(const Solution& sol) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["feasible"] = sol.feasible;
  j["variant"] = sol.matching.variant == Variant::kAsm ? "asm" : "csm";
  j["start"] = sol.matching.start;
  j["feasible_set"] = sol.matching.feasible_members;
  j["pairs"] = json::array();
  for (const auto& [a, c] : sol.matching.pairs())
    j["pairs"].push_back({{"attack", a}, {"countermeasure", c}});
  j["n_attacks"] = static_cast<int>(sol.matching.match_of_attack.size());
  j["aggregates"] = {{"total_time", sol.aggregates.total_time},
                     {"total_energy", sol.aggregates.total_energy},
                     {"total_money", sol.aggregates.total_money},
                     {"security_utility", sol.aggregates.security_utility},
                     {"qos_cost", sol.aggregates.qos_cost},
                     {"objective", sol.aggregates.objective},
                     {"coverage_instances", sol.aggregates.coverage_instances}};
  j["proposal_steps"] = sol.matching.proposal_steps;
  j["candidates_considered"] = sol.candidates_considered;
  return j.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("solution parse error: ") + e.what());
  }
  try {
    Solution sol;
    sol.feasible = j.at("feasible").get<bool>();
    sol.matching.variant =
        j.at("variant").get<std::string>() == "csm" ? Variant::kCsm : Variant::kAsm;
    sol.matching.start = j.at("start").get<int>();
    sol.matching.feasible_members = j.at("feasible_set").get<std::vector<int>>();
    sol.matching.match_of_attack.assign(j.at("n_attacks").get<int>(), -1);
    for (const auto& pair : j.at("pairs"))
      sol.matching.match_of_attack.at(pair.at("attack").get<int>()) =
          pair.at("countermeasure").get<int>();
    const auto& agg = j.at("aggregates");
    sol.aggregates.total_time = agg.at("total_time").get<double>();
    sol.aggregates.total_energy = agg.at("total_energy").get<double>();
    sol.aggregates.total_money = agg.at("total_money").get<double>();
    sol.aggregates.security_utility = agg.at("security_utility").get<double>();
    sol.aggregates.qos_cost = agg.at("qos_cost").get<double>();
    sol.aggregates.objective = agg.at("objective").get<double>();
    sol.aggregates.coverage_instances = agg.at("coverage_instances").get<long long>();
    return sol;
  } catch (const json::exception& e) {
    throw InputError(std::string("solution parse error: ") + e.what());
  }
}

}  // namespace irsmatch
