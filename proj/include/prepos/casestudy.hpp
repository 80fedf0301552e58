#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prepos/instance.hpp"

namespace prepos {

enum class ImpactLevel { Low, Medium, High };
enum class Disaster { Hurricane, Flood, Earthquake };

inline constexpr Disaster kAllDisasters[] = {Disaster::Earthquake, Disaster::Flood, Disaster::Hurricane};

std::string_view to_string(ImpactLevel level);
std::string_view to_string(Disaster disaster);
/// Throws std::invalid_argument for unknown names.
ImpactLevel parse_impact_level(std::string_view name);
Disaster parse_disaster(std::string_view name);

/// Demand interval [lo, hi] for a disaster at an impact level.
std::pair<double, double> demand_interval(Disaster disaster, ImpactLevel level);

/// Uniform draw from demand_interval(disaster, level). Uses the top 53 bits of
/// one 64-bit output, so a given engine state gives the same value everywhere.
double sample_demand(Disaster disaster, ImpactLevel level, std::mt19937_64& rng);

/// (state, disaster) -> level. Pairs not present mean "none".
using ImpactAssignment = std::map<std::pair<std::string, Disaster>, ImpactLevel>;

/// Illustrative ten-state hazard profile used when none is supplied.
ImpactAssignment default_impact_assignment();

struct StateLocation {
  std::string state;
  std::string city;
  LatLon position;
};

/// Reads a `state,city,lat,lon` CSV. Throws std::runtime_error when the file
/// cannot be read or a row is malformed.
std::vector<StateLocation> read_states(const std::filesystem::path& file);

struct CaseStudyConfig {
  std::uint64_t seed = 1;
  int stages = 4;
  /// Children per node, used for every stage unless stage_branching is set.
  int branching = 3;
  /// Children per node for stages 2..stages (size stages - 1).
  std::vector<int> stage_branching;
  std::filesystem::path states_file = "data/states.csv";
  double stacking_height = 1.0;  ///< ft; capacity = floor area x height
  ImpactAssignment impact_assignment = default_impact_assignment();
  /// Chance that a disaster type strikes at a given non-root node. When it
  /// strikes, every state assigned to it draws a demand. 1 means every
  /// assigned disaster occurs at every node.
  double occurrence_probability = 1.0;
};

/// Throws std::invalid_argument describing the first bad field.
void validate_config(const CaseStudyConfig& cfg);

/// Mainland-US instance: 4 facilities, one demand point per state in the
/// states file, water and food, and a balanced tree with equal branch
/// probabilities. Both commodities see the same demand; the root sees none.
/// Throws std::runtime_error for an unreadable states file or an assigned
/// state without coordinates.
Instance build_case_study(const CaseStudyConfig& cfg);

/// u = q/4, v = 10q, r = 2q/5 checked exactly on the decimal values.
bool cost_ratios_hold(const Commodity& c);

}  // namespace prepos
