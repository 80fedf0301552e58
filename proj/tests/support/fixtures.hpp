#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "prepos/instance.hpp"

namespace prepos::testing {

// One commodity, one facility, one demand point, two-leaf tree.
// Optimum: X_root = 100, objective 162.5.
inline Instance hand_instance() {
  Instance inst;
  inst.commodities.push_back({"c", 2, 1.0, 0.25, 10.0, 0.4, 1.0, 0.1});
  inst.facilities.push_back({"f", "F", 1000.0});
  inst.demand_points.push_back({"d", "D"});
  inst.distances.set("F", "D", 1.0);
  NodeId root = inst.tree.add_node(std::nullopt, 1.0, {{{"c", "d"}, 0.0}});
  inst.tree.add_node(root, 0.5, {{{"c", "d"}, 100.0}});
  inst.tree.add_node(root, 0.5, {{{"c", "d"}, 0.0}});
  return inst;
}

struct RandomLimits {
  int max_commodities = 2;
  int max_facilities = 2;
  int max_demand_points = 2;
  int max_lifetime = 3;
  int max_scenarios = 7;
};

// A valid instance with random costs, capacities and a random tree whose
// children split their parent's probability.
inline Instance random_instance(std::uint64_t seed, const RandomLimits& lim = {}) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  Instance inst;
  const int nc = pick(1, lim.max_commodities);
  const int nf = pick(1, lim.max_facilities);
  const int nd = pick(1, lim.max_demand_points);
  for (int c = 0; c < nc; ++c) {
    double q = uni(1.0, 20.0);
    inst.commodities.push_back({"c" + std::to_string(c), pick(1, lim.max_lifetime), q, uni(0.05, 0.5) * q,
                                uni(2.0, 15.0) * q, uni(0.1, 0.8) * q, uni(0.5, 3.0), uni(0.01, 0.2)});
  }
  for (int i = 0; i < nf; ++i)
    inst.facilities.push_back({"f" + std::to_string(i), "F" + std::to_string(i), uni(50.0, 600.0)});
  for (int j = 0; j < nd; ++j) inst.demand_points.push_back({"d" + std::to_string(j), "D" + std::to_string(j)});
  for (const auto& f : inst.facilities)
    for (const auto& d : inst.demand_points) inst.distances.set(f.location, d.location, uni(1.0, 50.0));

  auto demand = [&](bool root) {
    DemandMap m;
    for (const auto& c : inst.commodities)
      for (const auto& d : inst.demand_points) m[{c.id, d.id}] = root ? 0.0 : (pick(0, 3) == 0 ? 0.0 : uni(0.0, 150.0));
    return m;
  };

  // Balanced tree: stages and branching chosen so the node count fits.
  const int stages = pick(1, 3);
  int branching = 1;
  auto count = [&](int b) {
    int total = 0, level = 1;
    for (int s = 0; s < stages; ++s, level *= b) total += level;
    return total;
  };
  while (count(branching + 1) <= lim.max_scenarios && pick(0, 1) == 1) ++branching;
  if (count(branching) > lim.max_scenarios) branching = 1;

  NodeId root = inst.tree.add_node(std::nullopt, 1.0, demand(true));
  std::vector<NodeId> frontier{root};
  for (int s = 1; s < stages; ++s) {
    std::vector<NodeId> next;
    for (NodeId parent : frontier) {
      double pp = inst.tree.node(parent).probability;
      std::vector<double> w(static_cast<std::size_t>(branching));
      double sum = 0;
      for (double& x : w) sum += (x = uni(0.2, 1.0));
      for (double x : w) next.push_back(inst.tree.add_node(parent, pp * x / sum, demand(false)));
    }
    frontier = std::move(next);
  }
  return inst;
}

}  // namespace prepos::testing
