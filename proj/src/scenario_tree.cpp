#include "prepos/scenario_tree.hpp"

#include <cmath>
#include <stdexcept>

#include "prepos/detail/numeric_text.hpp"

namespace prepos {

using detail::compact;

double ScenarioNode::demand_for(const std::string& commodity, const std::string& point) const {
  auto it = demand.find({commodity, point});
  return it == demand.end() ? 0.0 : it->second;
}

NodeId ScenarioTree::add_node(std::optional<NodeId> parent, double probability, DemandMap demand) {
  if (!(probability > 0.0 && probability <= 1.0)) {
    throw std::invalid_argument("probability out of range (0, 1]: " + compact(probability));
  }
  int stage = 1;
  if (parent) {
    if (!contains(*parent)) {
      throw std::invalid_argument("unknown parent id " + std::to_string(parent->value));
    }
    stage = node(*parent).stage + 1;
  } else {
    if (!nodes_.empty()) throw std::invalid_argument("tree already has a root");
    if (std::abs(probability - 1.0) > kProbabilityTolerance) {
      throw std::invalid_argument("root probability must be 1, got " + compact(probability));
    }
  }
  for (const auto& [key, units] : demand) {
    if (!(units >= 0.0) || !std::isfinite(units)) {
      throw std::invalid_argument("demand for (" + key.first + ", " + key.second + ") must be a nonnegative number");
    }
  }

  NodeId id(static_cast<std::uint32_t>(nodes_.size() + 1));
  nodes_.push_back(ScenarioNode{id, parent, stage, probability, std::move(demand)});
  children_.emplace_back();
  if (parent) children_[parent->value - 1].push_back(id);
  if (stage > horizon_) horizon_ = stage;
  return id;
}

const ScenarioNode& ScenarioTree::node(NodeId id) const {
  if (!contains(id)) throw std::out_of_range("unknown node id " + std::to_string(id.value));
  return nodes_[id.value - 1];
}

const std::vector<NodeId>& ScenarioTree::children(NodeId id) const {
  if (!contains(id)) throw std::out_of_range("unknown node id " + std::to_string(id.value));
  return children_[id.value - 1];
}

std::vector<NodeId> ScenarioTree::path_to_root(NodeId id) const {
  std::vector<NodeId> path;
  std::optional<NodeId> cur = node(id).id;
  while (cur) {
    path.push_back(*cur);
    cur = nodes_[cur->value - 1].parent;
  }
  return path;
}

std::vector<NodeId> ScenarioTree::nodes_at_stage(int stage) const {
  if (stage < 1 || stage > horizon_) {
    throw std::out_of_range("stage " + std::to_string(stage) + " outside [1, " + std::to_string(horizon_) + "]");
  }
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (n.stage == stage) out.push_back(n.id);
  }
  return out;
}

TreeValidation validate_tree(const ScenarioTree& tree) {
  TreeValidation report;
  if (tree.empty()) {
    report.violations.push_back("tree is empty");
    return report;
  }
  constexpr double tol = ScenarioTree::kProbabilityTolerance;

  std::vector<double> stage_sum(static_cast<std::size_t>(tree.horizon()) + 1, 0.0);
  bool unbalanced = false;
  for (const auto& n : tree.nodes()) {
    stage_sum[static_cast<std::size_t>(n.stage)] += n.probability;
    const auto& kids = tree.children(n.id);
    if (kids.empty()) {
      if (n.stage != tree.horizon()) unbalanced = true;
      continue;
    }
    double child_sum = 0.0;
    for (NodeId k : kids) {
      const auto& child = tree.node(k);
      child_sum += child.probability;
      if (child.probability > n.probability + tol) {
        report.violations.push_back("node " + std::to_string(k.value) + " probability " + compact(child.probability) +
                                    " exceeds parent " + std::to_string(n.id.value) + " probability " +
                                    compact(n.probability));
      }
    }
    if (std::abs(child_sum - n.probability) > tol) {
      report.violations.push_back("children of node " + std::to_string(n.id.value) + " sum to " + compact(child_sum) +
                                  ", expected " + compact(n.probability));
    }
  }
  for (int s = 1; s <= tree.horizon(); ++s) {
    double sum = stage_sum[static_cast<std::size_t>(s)];
    if (std::abs(sum - 1.0) > tol) {
      report.violations.push_back("stage " + std::to_string(s) + " sums to " + compact(sum));
    }
  }
  if (unbalanced) report.violations.push_back("unbalanced horizon: some leaves end before stage " +
                                              std::to_string(tree.horizon()));

  const auto& root = tree.node(NodeId(1));
  for (const auto& [key, units] : root.demand) {
    if (units > 0.0) {
      report.warnings.push_back("root demand for (" + key.first + ", " + key.second +
                                ") is nonzero; it can only be met as shortage");
    }
  }
  return report;
}

}  // namespace prepos
