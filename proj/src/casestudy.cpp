#include "prepos/casestudy.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prepos/detail/numeric_text.hpp"

namespace prepos {

std::string_view to_string(ImpactLevel level) {
  switch (level) {
    case ImpactLevel::Low: return "low";
    case ImpactLevel::Medium: return "medium";
    case ImpactLevel::High: return "high";
  }
  return "?";
}

std::string_view to_string(Disaster disaster) {
  switch (disaster) {
    case Disaster::Hurricane: return "hurricane";
    case Disaster::Flood: return "flood";
    case Disaster::Earthquake: return "earthquake";
  }
  return "?";
}

ImpactLevel parse_impact_level(std::string_view name) {
  for (ImpactLevel l : {ImpactLevel::Low, ImpactLevel::Medium, ImpactLevel::High})
    if (to_string(l) == name) return l;
  throw std::invalid_argument("unknown impact level '" + std::string(name) + "'");
}

Disaster parse_disaster(std::string_view name) {
  for (Disaster d : kAllDisasters)
    if (to_string(d) == name) return d;
  throw std::invalid_argument("unknown disaster '" + std::string(name) + "'");
}

std::pair<double, double> demand_interval(Disaster disaster, ImpactLevel level) {
  const bool quake = disaster == Disaster::Earthquake;
  switch (level) {
    case ImpactLevel::Low: return quake ? std::pair{1000.0, 2000.0} : std::pair{100.0, 200.0};
    case ImpactLevel::Medium: return quake ? std::pair{2000.0, 4000.0} : std::pair{200.0, 400.0};
    case ImpactLevel::High: return quake ? std::pair{9000.0, 10000.0} : std::pair{900.0, 1000.0};
  }
  throw std::invalid_argument("bad impact level");
}

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

double sample_demand(Disaster disaster, ImpactLevel level, std::mt19937_64& rng) {
  auto [lo, hi] = demand_interval(disaster, level);
  return lo + (hi - lo) * unit_draw(rng);
}

ImpactAssignment default_impact_assignment() {
  using enum Disaster;
  using enum ImpactLevel;
  return {
      {{"Florida", Hurricane}, High},     {{"Florida", Flood}, Medium},
      {{"Texas", Hurricane}, High},       {{"Texas", Flood}, Medium},
      {{"Louisiana", Hurricane}, Medium}, {{"Louisiana", Flood}, Medium},
      {{"North Carolina", Hurricane}, Medium},
      {{"South Carolina", Hurricane}, Low},
      {{"California", Earthquake}, Medium}, {{"California", Flood}, Low},
      {{"Washington", Earthquake}, Low},
      {{"Oklahoma", Flood}, Low},
      {{"Missouri", Flood}, Medium},      {{"Missouri", Earthquake}, Low},
      {{"Tennessee", Flood}, Low},
  };
}

std::vector<StateLocation> read_states(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read states file " + file.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("states file " + file.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "state,city,lat,lon") throw std::runtime_error("states file header must be state,city,lat,lon");

  std::vector<StateLocation> out;
  std::set<std::string> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 4) throw std::runtime_error("states file line " + std::to_string(lineno) + ": expected 4 fields");
    StateLocation s;
    s.state = fields[0];
    s.city = fields[1];
    try {
      s.position = {detail::parse_double(fields[2]), detail::parse_double(fields[3])};
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("states file line " + std::to_string(lineno) + ": bad coordinate");
    }
    if (!seen.insert(s.state).second)
      throw std::runtime_error("states file line " + std::to_string(lineno) + ": duplicate state " + s.state);
    out.push_back(std::move(s));
  }
  return out;
}

void validate_config(const CaseStudyConfig& cfg) {
  if (cfg.stages < 2) throw std::invalid_argument("stages must be at least 2");
  if (cfg.stage_branching.empty()) {
    if (cfg.branching < 1) throw std::invalid_argument("branching must be at least 1");
  } else {
    if (static_cast<int>(cfg.stage_branching.size()) != cfg.stages - 1)
      throw std::invalid_argument("stage_branching needs one entry per stage after the root");
    for (int b : cfg.stage_branching)
      if (b < 1) throw std::invalid_argument("branching must be at least 1");
  }
  if (!(cfg.stacking_height > 0) || !std::isfinite(cfg.stacking_height))
    throw std::invalid_argument("stacking_height must be positive");
  if (!(cfg.occurrence_probability >= 0 && cfg.occurrence_probability <= 1))
    throw std::invalid_argument("occurrence_probability must lie in [0, 1]");
}

namespace {

struct FacilitySite {
  const char* state;
  double floor_area;  // sq ft
};
constexpr FacilitySite kFacilities[] = {
    {"Texas", 1.6e6}, {"California", 110000}, {"Georgia", 407000}, {"Maryland", 68023}};

// Costs in $, space in cu ft per unit, transport in $ per unit-mile.
const Commodity kWater{"water", 4, 647.7, 161.925, 6477, 259.08, 144.6, 0.3};
const Commodity kFood{"food", 4, 5420, 1355, 54200, 2168, 83.33, 0.04};

// Values in millionths, for exact decimal arithmetic on table inputs.
long long micros(double v) { return std::llround(v * 1e6); }

}  // namespace

bool cost_ratios_hold(const Commodity& c) {
  const long long q = micros(c.acquisition_cost);
  return 4 * micros(c.holding_cost) == q && micros(c.penalty_cost) == 10 * q && 5 * micros(c.removal_cost) == 2 * q;
}

Instance build_case_study(const CaseStudyConfig& cfg) {
  validate_config(cfg);
  const std::vector<StateLocation> states = read_states(cfg.states_file);
  std::map<std::string, LatLon> where;
  for (const auto& s : states) where[s.state] = s.position;

  for (const auto& [key, level] : cfg.impact_assignment)
    if (!where.contains(key.first))
      throw std::runtime_error("impact assignment names " + key.first + ", which has no coordinates");

  Instance inst;
  for (const Commodity& c : {kWater, kFood}) {
    if (!cost_ratios_hold(c)) throw std::logic_error("cost table violates the fixed cost ratios for " + c.id);
    inst.commodities.push_back(c);
  }
  for (const auto& f : kFacilities) {
    if (!where.contains(f.state)) throw std::runtime_error(std::string("states file lacks facility state ") + f.state);
    inst.facilities.push_back({f.state, f.state, f.floor_area * cfg.stacking_height});
  }
  for (const auto& s : states) inst.demand_points.push_back({s.state, s.state});
  for (const auto& f : inst.facilities)
    for (const auto& d : inst.demand_points)
      inst.distances.set(f.location, d.location,
                         f.location == d.location ? 0.0 : great_circle_distance(where[f.location], where[d.location]));

  std::mt19937_64 rng(cfg.seed);
  auto node_demand = [&](bool root) {
    std::map<std::string, double> units;
    if (!root) {
      std::map<Disaster, bool> strikes;
      for (Disaster d : kAllDisasters)
        strikes[d] = cfg.occurrence_probability >= 1.0 || unit_draw(rng) < cfg.occurrence_probability;
      for (const auto& [key, level] : cfg.impact_assignment)
        if (strikes[key.second]) units[key.first] += sample_demand(key.second, level, rng);
    }
    DemandMap m;
    for (const auto& c : inst.commodities)
      for (const auto& d : inst.demand_points) {
        auto it = units.find(d.id);
        m[{c.id, d.id}] = it == units.end() ? 0.0 : it->second;
      }
    return m;
  };

  NodeId root = inst.tree.add_node(std::nullopt, 1.0, node_demand(true));
  std::vector<NodeId> frontier{root};
  for (int stage = 2; stage <= cfg.stages; ++stage) {
    const int b = cfg.stage_branching.empty() ? cfg.branching : cfg.stage_branching[stage - 2];
    std::vector<NodeId> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(b));
    for (NodeId parent : frontier) {
      const double p = inst.tree.node(parent).probability / b;
      for (int k = 0; k < b; ++k) next.push_back(inst.tree.add_node(parent, p, node_demand(false)));
    }
    frontier = std::move(next);
  }
  return inst;
}

}  // namespace prepos
