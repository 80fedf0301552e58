#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace prepos {

/// Dense 1-based scenario index. Node 1 is always the root.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// (commodity id, demand-point id) -> units demanded at a node.
using DemandKey = std::pair<std::string, std::string>;
using DemandMap = std::map<DemandKey, double>;

struct ScenarioNode {
  NodeId id;
  std::optional<NodeId> parent;
  int stage = 1;
  /// Unconditional probability p_s of reaching this node.
  double probability = 1.0;
  DemandMap demand;

  double demand_for(const std::string& commodity, const std::string& point) const;
};

struct TreeValidation {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

/// Append-only scenario tree with unconditional node probabilities.
///
/// Nodes are created with `add_node`; existing nodes are never modified, so a
/// built tree can be shared freely between readers.
class ScenarioTree {
 public:
  static constexpr double kProbabilityTolerance = 1e-9;

  /// Appends a node. Throws std::invalid_argument when the parent is unknown,
  /// a second root is attempted, or the probability is outside (0, 1]
  /// (the root must carry probability 1).
  NodeId add_node(std::optional<NodeId> parent, double probability, DemandMap demand = {});

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeId id) const { return id.value >= 1 && id.value <= nodes_.size(); }

  /// Throws std::out_of_range for unknown ids.
  const ScenarioNode& node(NodeId id) const;
  std::span<const ScenarioNode> nodes() const { return nodes_; }

  /// Largest stage present (0 for an empty tree).
  int horizon() const { return horizon_; }

  const std::vector<NodeId>& children(NodeId id) const;
  bool is_leaf(NodeId id) const { return children(id).empty(); }

  /// [node, parent, ..., root]. Throws std::out_of_range for unknown ids.
  std::vector<NodeId> path_to_root(NodeId id) const;

  /// Nodes of one stage in id order. Throws std::out_of_range when the stage
  /// is outside [1, horizon].
  std::vector<NodeId> nodes_at_stage(int stage) const;

 private:
  std::vector<ScenarioNode> nodes_;
  std::vector<std::vector<NodeId>> children_;
  int horizon_ = 0;
};

/// Checks stage sums, parent sums, probability monotonicity and balance.
/// Nonzero root demand is reported as a warning, not a violation.
TreeValidation validate_tree(const ScenarioTree& tree);

}  // namespace prepos

template <>
struct std::hash<prepos::NodeId> {
  std::size_t operator()(prepos::NodeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
