#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "prepos/scenario_tree.hpp"

namespace prepos {
namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const auto& m : msgs)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

// Ten nodes over four stages with the chain 1 -> 2 -> 5 -> 9.
ScenarioTree ten_node_tree() {
  ScenarioTree t;
  NodeId n1 = t.add_node(std::nullopt, 1.0);
  NodeId n2 = t.add_node(n1, 0.5);
  NodeId n3 = t.add_node(n1, 0.5);
  NodeId n4 = t.add_node(n2, 0.25);
  NodeId n5 = t.add_node(n2, 0.25);
  NodeId n6 = t.add_node(n3, 0.5);
  t.add_node(n4, 0.25);
  t.add_node(n6, 0.25);
  t.add_node(n5, 0.25);
  t.add_node(n6, 0.25);
  return t;
}

TEST(ScenarioTree, RootGetsIdOne) {
  ScenarioTree t;
  EXPECT_EQ(t.add_node(std::nullopt, 1.0), NodeId(1));
  NodeId child = t.add_node(NodeId(1), 0.6);
  EXPECT_EQ(child, NodeId(2));
  EXPECT_EQ(t.node(child).stage, 2);
  EXPECT_EQ(t.node(child).parent, NodeId(1));
}

TEST(ScenarioTree, AddNodeRejectsBadInput) {
  ScenarioTree t;
  EXPECT_THROW(t.add_node(NodeId(1), 0.5), std::invalid_argument);
  EXPECT_THROW(t.add_node(std::nullopt, 0.5), std::invalid_argument);
  t.add_node(std::nullopt, 1.0);
  EXPECT_THROW(t.add_node(std::nullopt, 1.0), std::invalid_argument);
  EXPECT_THROW(t.add_node(NodeId(7), 0.5), std::invalid_argument);
  EXPECT_THROW(t.add_node(NodeId(1), 0.0), std::invalid_argument);
  EXPECT_THROW(t.add_node(NodeId(1), 1.5), std::invalid_argument);
  EXPECT_THROW(t.add_node(NodeId(1), 0.5, {{{"c", "j"}, -1.0}}), std::invalid_argument);
  EXPECT_EQ(t.size(), 1u);
}

TEST(ScenarioTree, ChainStagesAndPath) {
  ScenarioTree t = ten_node_tree();
  EXPECT_EQ(t.node(NodeId(2)).stage, 2);
  EXPECT_EQ(t.node(NodeId(5)).stage, 3);
  EXPECT_EQ(t.node(NodeId(9)).stage, 4);
  EXPECT_EQ(t.path_to_root(NodeId(9)), (std::vector<NodeId>{NodeId(9), NodeId(5), NodeId(2), NodeId(1)}));
  EXPECT_EQ(t.path_to_root(NodeId(1)), std::vector<NodeId>{NodeId(1)});
  EXPECT_THROW(t.path_to_root(NodeId(42)), std::out_of_range);
  EXPECT_EQ(t.horizon(), 4);
}

TEST(ScenarioTree, NodesAtStage) {
  ScenarioTree t = ten_node_tree();
  EXPECT_EQ(t.nodes_at_stage(1), std::vector<NodeId>{NodeId(1)});
  EXPECT_EQ(t.nodes_at_stage(2), t.children(NodeId(1)));
  EXPECT_THROW(t.nodes_at_stage(0), std::out_of_range);
  EXPECT_THROW(t.nodes_at_stage(5), std::out_of_range);

  ScenarioTree bin;
  NodeId r = bin.add_node(std::nullopt, 1.0);
  for (int k = 0; k < 2; ++k) {
    NodeId c = bin.add_node(r, 0.5);
    bin.add_node(c, 0.25);
    bin.add_node(c, 0.25);
  }
  EXPECT_EQ(bin.nodes_at_stage(3).size(), 4u);
}

TEST(ValidateTree, SymmetricSplitIsValid) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0);
  t.add_node(r, 0.5);
  t.add_node(r, 0.5);
  auto v = validate_tree(t);
  EXPECT_TRUE(v.ok());
  EXPECT_TRUE(validate_tree(ten_node_tree()).ok());
}

TEST(ValidateTree, StageSumReported) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0);
  t.add_node(r, 0.3);
  t.add_node(r, 0.6);
  auto v = validate_tree(t);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(mentions(v.violations, "stage 2 sums to 0.9"));
}

TEST(ValidateTree, UnbalancedHorizonReported) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0);
  NodeId a = t.add_node(r, 0.5);
  NodeId b = t.add_node(r, 0.5);
  t.add_node(a, 0.5);
  NodeId bb = t.add_node(b, 0.5);
  t.add_node(bb, 0.5);
  auto v = validate_tree(t);
  EXPECT_TRUE(mentions(v.violations, "unbalanced horizon"));
}

TEST(ValidateTree, ChildProbabilityAboveParent) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0);
  NodeId a = t.add_node(r, 0.2);
  t.add_node(r, 0.8);
  t.add_node(a, 0.7);
  auto v = validate_tree(t);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(mentions(v.violations, "exceeds parent"));
}

TEST(ValidateTree, RootDemandIsOnlyAWarning) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0, {{{"c", "j"}, 5.0}});
  t.add_node(r, 1.0);
  auto v = validate_tree(t);
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(v.warnings.empty());
}

// Random balanced trees: stage sums hold and every leaf path spans the horizon.
TEST(ScenarioTreeProperty, RandomBalancedTrees) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ScenarioTree t;
    std::vector<NodeId> frontier{t.add_node(std::nullopt, 1.0)};
    int stages = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int s = 1; s < stages; ++s) {
      std::vector<NodeId> next;
      for (NodeId p : frontier) {
        int b = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<double> w(static_cast<std::size_t>(b));
        for (double& x : w) x = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        for (double x : w) next.push_back(t.add_node(p, t.node(p).probability * x / sum));
      }
      frontier = next;
    }
    ASSERT_TRUE(validate_tree(t).ok());
    for (int s = 1; s <= t.horizon(); ++s) {
      double sum = 0;
      for (NodeId n : t.nodes_at_stage(s)) sum += t.node(n).probability;
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
    for (NodeId leaf : frontier) EXPECT_EQ(static_cast<int>(t.path_to_root(leaf).size()), t.horizon());
  }
}

TEST(ScenarioTree, AppendDoesNotTouchExistingNodes) {
  ScenarioTree t;
  NodeId r = t.add_node(std::nullopt, 1.0);
  NodeId a = t.add_node(r, 0.5, {{{"c", "j"}, 3.0}});
  ScenarioNode before = t.node(a);
  t.add_node(a, 0.5);
  t.add_node(r, 0.5);
  EXPECT_EQ(t.node(a).probability, before.probability);
  EXPECT_EQ(t.node(a).demand, before.demand);
  EXPECT_EQ(t.node(a).stage, before.stage);
}

}  // namespace
}  // namespace prepos
