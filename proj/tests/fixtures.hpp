#pragma once

#include "irsmatch/model.hpp"

namespace irsmatch::testing {

// Two-node, two-attack, two-countermeasure hand instance used throughout the
// unit tests. All expected values below were computed by hand from it.
//
//   n0 alpha=1.0, n1 alpha=0.5
//   a0: R=0.8 (severity 8, probability 0.1), affects {n0, n1}
//   a1: R=0.6 (severity 6, probability 0.1), affects {n1}
//   c0: covers a0 (dR=0.4), T=0.4, E=0.4, money=0.3
//   c1: covers a0 (dR=0.2) and a1 (dR=0.3), T=0.5, E=0.5, money=0.4
//
// Pair costs (equal betas, unit ranges):  U_a(c0)=1.1/3, U_a(c1)=1.4/3
// Security utilities: U_c0(a0)=0.5, U_c1(a0)=0.25, U_c1(a1)=0.5
inline Scenario tiny() {
  Scenario s;
  s.nodes = {{0, 1.0}, {1, 0.5}};
  AttackType a0;
  a0.id = 0;
  a0.severity = 8.0;
  a0.probability = 0.1;
  a0.affected_nodes = {0, 1};
  AttackType a1;
  a1.id = 1;
  a1.severity = 6.0;
  a1.probability = 0.1;
  a1.affected_nodes = {1};
  s.attacks = {a0, a1};

  CountermeasureType c0;
  c0.id = 0;
  c0.covers = {{0, 0.4}};
  c0.t_pre = c0.t_dep = 0.2;
  c0.e_pre = c0.e_dep = 0.2;
  c0.money = 0.3;
  CountermeasureType c1;
  c1.id = 1;
  c1.covers = {{0, 0.2}, {1, 0.3}};
  c1.t_pre = c1.t_dep = 0.25;
  c1.e_pre = c1.e_dep = 0.25;
  c1.money = 0.4;
  s.countermeasures = {c0, c1};

  s.budget_xi = 1.0;
  s.coverage_fraction = 1.0;
  return s;
}

// Hand objective of the matching {(a0,c0),(a1,c1)} on tiny():
// 0.5/(1.1/3) + 0.5/(1.4/3) = 15/11 + 15/14
inline constexpr double kTinyBestObjective = 15.0 / 11.0 + 15.0 / 14.0;

}  // namespace irsmatch::testing
