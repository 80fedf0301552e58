#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "prepos/instance.hpp"
#include "support/fixtures.hpp"

namespace prepos {
namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const auto& m : msgs)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

Instance two_commodity_instance() {
  Instance inst;
  inst.commodities.push_back({"water", 4, 647.7, 161.925, 6477, 259.08, 144.6, 0.3});
  inst.commodities.push_back({"food", 4, 5420, 1355, 54200, 2168, 83.33, 0.04});
  inst.facilities.push_back({"tx", "A", 1000});
  inst.demand_points.push_back({"a", "A"});
  inst.demand_points.push_back({"b", "B"});
  inst.demand_points.push_back({"c", "C"});
  inst.distances.set("A", "A", 0.0);
  inst.distances.set("A", "B", 100.0);
  inst.distances.set("A", "C", 1000.0);
  inst.tree.add_node(std::nullopt, 1.0);
  return inst;
}

TEST(TransportCost, RateTimesDistance) {
  Instance inst = two_commodity_instance();
  EXPECT_DOUBLE_EQ(transport_cost(inst, "water", "tx", "b"), 30.0);
  EXPECT_DOUBLE_EQ(transport_cost(inst, "food", "tx", "c"), 40.0);
  EXPECT_EQ(transport_cost(inst, "food", "tx", "a"), 0.0);
  EXPECT_THROW(transport_cost(inst, "blankets", "tx", "a"), std::out_of_range);
  EXPECT_THROW(transport_cost(inst, "food", "nowhere", "a"), std::out_of_range);
}

TEST(DistanceMatrix, SymmetricStorage) {
  DistanceMatrix d;
  d.set("B", "A", 12.5);
  EXPECT_EQ(d.at("A", "B"), 12.5);
  EXPECT_EQ(d.at("B", "A"), 12.5);
  EXPECT_TRUE(d.contains("A", "B"));
  EXPECT_THROW(d.at("A", "Z"), std::out_of_range);
  EXPECT_THROW(d.set("A", "A", 3.0), std::invalid_argument);
  EXPECT_THROW(d.set("A", "B", -1.0), std::invalid_argument);
  EXPECT_THROW(d.set("A", "B", NAN), std::invalid_argument);
}

TEST(GreatCircle, KnownValues) {
  LatLon houston{29.76, -95.37};
  LatLon la{34.05, -118.24};
  EXPECT_EQ(great_circle_distance(houston, houston), 0.0);
  EXPECT_NEAR(great_circle_distance({0, 0}, {0, 180}), std::numbers::pi * 3958.8, 0.5);
  EXPECT_NEAR(great_circle_distance({0, 0}, {0, 180}), 12437.0, 0.5);
  // Pinned from a separately written atan2 (Vincenty-sphere) evaluation.
  EXPECT_NEAR(great_circle_distance(houston, la), 1370.69, 1.0);
  EXPECT_THROW(great_circle_distance({91, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(great_circle_distance({0, 0}, {0, -181}), std::invalid_argument);
}

TEST(GreatCircle, SymmetricAndZeroOnDiagonal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lat(-90, 90), lon(-180, 180);
  for (int k = 0; k < 1000; ++k) {
    LatLon a{lat(rng), lon(rng)}, b{lat(rng), lon(rng)};
    EXPECT_DOUBLE_EQ(great_circle_distance(a, b), great_circle_distance(b, a));
    EXPECT_EQ(great_circle_distance(a, a), 0.0);
    EXPECT_LE(great_circle_distance(a, b), std::numbers::pi * kEarthRadiusMiles + 1e-6);
  }
}

TEST(ValidateInstance, HandInstanceIsValid) {
  EXPECT_TRUE(validate_instance(testing::hand_instance()).empty());
  EXPECT_TRUE(validate_instance(two_commodity_instance()).empty());
}

TEST(ValidateInstance, UndeclaredCommodityInDemand) {
  Instance inst = testing::hand_instance();
  Instance bad;
  bad.commodities = inst.commodities;
  bad.facilities = inst.facilities;
  bad.demand_points = inst.demand_points;
  bad.distances = inst.distances;
  bad.tree.add_node(std::nullopt, 1.0, {{{"blankets", "d"}, 3.0}});
  auto v = validate_instance(bad);
  EXPECT_TRUE(mentions(v, "blankets"));
}

TEST(ValidateInstance, NegativeHoldingCost) {
  Instance inst = testing::hand_instance();
  inst.commodities[0].holding_cost = -0.25;
  EXPECT_FALSE(validate_instance(inst).empty());
}

TEST(ValidateInstance, ReportsEveryProblem) {
  Instance inst = testing::hand_instance();
  inst.commodities[0].lifetime_periods = 0;
  inst.facilities[0].capacity = 0;
  inst.demand_points.push_back({"d", "D"});
  auto v = validate_instance(inst);
  EXPECT_GE(v.size(), 3u);
}

TEST(ValidateInstance, MissingDistance) {
  Instance inst = testing::hand_instance();
  inst.demand_points.push_back({"e", "E"});
  EXPECT_FALSE(validate_instance(inst).empty());
}

TEST(ValidateInstance, TreeViolationsArePrefixed) {
  Instance inst = testing::hand_instance();
  Instance bad;
  bad.commodities = inst.commodities;
  bad.facilities = inst.facilities;
  bad.demand_points = inst.demand_points;
  bad.distances = inst.distances;
  NodeId r = bad.tree.add_node(std::nullopt, 1.0);
  bad.tree.add_node(r, 0.3);
  bad.tree.add_node(r, 0.6);
  EXPECT_TRUE(mentions(validate_instance(bad), "tree: "));
}

TEST(TransportCost, SymmetricWhenFacilityAndPointSwapLocations) {
  Instance inst;
  inst.commodities.push_back({"c", 1, 1, 1, 1, 1, 1, 0.5});
  inst.facilities.push_back({"f1", "P", 10});
  inst.facilities.push_back({"f2", "Q", 10});
  inst.demand_points.push_back({"p", "P"});
  inst.demand_points.push_back({"q", "Q"});
  inst.distances.set("P", "P", 0);
  inst.distances.set("Q", "Q", 0);
  inst.distances.set("P", "Q", 7);
  inst.tree.add_node(std::nullopt, 1.0);
  EXPECT_EQ(transport_cost(inst, "c", "f1", "q"), transport_cost(inst, "c", "f2", "p"));
}

}  // namespace
}  // namespace prepos
