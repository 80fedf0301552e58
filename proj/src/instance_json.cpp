#include "prepos/instance_json.hpp"

#include <json.hpp>

#include "prepos/detail/numeric_text.hpp"

namespace prepos {

using nlohmann::ordered_json;

namespace {

std::string decimal(double v) { return detail::shortest(v); }

double decimal_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw FormatError(std::string(key) + " must be a decimal string");
  try {
    return detail::parse_double(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw FormatError(std::string(key) + " is not a number: " + v.get<std::string>());
  }
}

double number_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw FormatError(std::string(key) + " must be a number");
  return v.get<double>();
}

std::string string_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw FormatError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

const ordered_json& array_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_array()) throw FormatError(std::string(key) + " must be an array");
  return v;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["commodities"] = ordered_json::array();
  for (const auto& c : inst.commodities)
    j["commodities"].push_back({{"id", c.id},
                                {"lifetime_periods", c.lifetime_periods},
                                {"acquisition_cost", decimal(c.acquisition_cost)},
                                {"holding_cost", decimal(c.holding_cost)},
                                {"penalty_cost", decimal(c.penalty_cost)},
                                {"removal_cost", decimal(c.removal_cost)},
                                {"unit_space", decimal(c.unit_space)},
                                {"transport_rate", decimal(c.transport_rate)}});
  j["facilities"] = ordered_json::array();
  for (const auto& f : inst.facilities)
    j["facilities"].push_back({{"id", f.id}, {"location", f.location}, {"capacity", f.capacity}});
  j["demand_points"] = ordered_json::array();
  for (const auto& d : inst.demand_points) j["demand_points"].push_back({{"id", d.id}, {"location", d.location}});
  j["distances"] = ordered_json::array();
  for (const auto& [pair, miles] : inst.distances.pairs())
    j["distances"].push_back({{"from", pair.first}, {"to", pair.second}, {"miles", miles}});

  ordered_json nodes = ordered_json::array();
  for (const auto& n : inst.tree.nodes()) {
    ordered_json node{{"id", n.id.value},
                      {"parent", n.parent ? ordered_json(n.parent->value) : ordered_json(nullptr)},
                      {"probability", n.probability}};
    node["demand"] = ordered_json::array();
    for (const auto& [key, units] : n.demand)
      node["demand"].push_back({{"commodity", key.first}, {"point", key.second}, {"units", units}});
    nodes.push_back(std::move(node));
  }
  j["tree"] = {{"nodes", std::move(nodes)}};
  return j.dump(1) + "\n";
}

Instance instance_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw FormatError("instance must be a JSON object");
    Instance inst;
    for (const auto& c : array_field(j, "commodities")) {
      const auto& lt = c.at("lifetime_periods");
      if (!lt.is_number_integer()) throw FormatError("lifetime_periods must be an integer");
      inst.commodities.push_back({string_field(c, "id"), lt.get<int>(), decimal_field(c, "acquisition_cost"),
                                  decimal_field(c, "holding_cost"), decimal_field(c, "penalty_cost"),
                                  decimal_field(c, "removal_cost"), decimal_field(c, "unit_space"),
                                  decimal_field(c, "transport_rate")});
    }
    for (const auto& f : array_field(j, "facilities"))
      inst.facilities.push_back({string_field(f, "id"), string_field(f, "location"), number_field(f, "capacity")});
    for (const auto& d : array_field(j, "demand_points"))
      inst.demand_points.push_back({string_field(d, "id"), string_field(d, "location")});
    for (const auto& d : array_field(j, "distances"))
      inst.distances.set(string_field(d, "from"), string_field(d, "to"), number_field(d, "miles"));

    const auto& tree = j.at("tree");
    std::uint32_t expected = 1;
    for (const auto& n : array_field(tree, "nodes")) {
      const auto& id = n.at("id");
      if (!id.is_number_unsigned() || id.get<std::uint32_t>() != expected)
        throw FormatError("tree node ids must run 1, 2, ... in order; expected " + std::to_string(expected));
      std::optional<NodeId> parent;
      const auto& pj = n.at("parent");
      if (!pj.is_null()) {
        if (!pj.is_number_unsigned()) throw FormatError("parent must be a node id or null");
        parent = NodeId(pj.get<std::uint32_t>());
      }
      DemandMap demand;
      for (const auto& e : array_field(n, "demand"))
        demand[{string_field(e, "commodity"), string_field(e, "point")}] = number_field(e, "units");
      inst.tree.add_node(parent, number_field(n, "probability"), std::move(demand));
      ++expected;
    }
    return inst;
  } catch (const FormatError&) {
    throw;
  } catch (const ordered_json::exception& e) {
    throw FormatError(std::string("instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("instance JSON: ") + e.what());
  }
}

std::string solution_to_json(const LinearProgram& lp, const lp::Solution& sol) {
  ordered_json j;
  j["status"] = std::string(lp::to_string(sol.status));
  j["objective"] = sol.objective;
  j["iterations"] = sol.iterations;
  j["max_residual"] = sol.max_residual;
  if (sol.optimal()) {
    CostBreakdown b = decompose_costs(lp, sol.values);
    j["breakdown"] = {{"Q", b.Q}, {"O", b.O}, {"U", b.U}, {"V", b.V}, {"R", b.R}, {"total", b.total}};
  }
  ordered_json values = ordered_json::object();
  for (int k = 0; k < lp.num_columns() && k < static_cast<int>(sol.values.size()); ++k)
    if (sol.values[k] != 0.0) values[lp.problem.column_names[k]] = sol.values[k];
  j["values"] = std::move(values);
  return j.dump(1) + "\n";
}

}  // namespace prepos
