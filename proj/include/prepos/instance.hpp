#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prepos/scenario_tree.hpp"

namespace prepos {

/// One relief item type and all of its unit costs.
struct Commodity {
  std::string id;
  int lifetime_periods = 1;     ///< |T^c|; t = 1 is fresh, t = |T^c| is expired.
  double acquisition_cost = 0;  ///< q, $/unit
  double holding_cost = 0;      ///< u, $/unit per period
  double penalty_cost = 0;      ///< v, $/unit short
  double removal_cost = 0;      ///< r, $/unit expired
  double unit_space = 0;        ///< b, volume per unit
  double transport_rate = 0;    ///< $/unit-mile

  friend bool operator==(const Commodity&, const Commodity&) = default;
};

struct Facility {
  std::string id;
  std::string location;
  double capacity = 0;  ///< M, in the same volume unit as Commodity::unit_space

  friend bool operator==(const Facility&, const Facility&) = default;
};

struct DemandPoint {
  std::string id;
  std::string location;

  friend bool operator==(const DemandPoint&, const DemandPoint&) = default;
};

/// Symmetric location-to-location mileage. d(a, a) is always 0.
class DistanceMatrix {
 public:
  /// Stores d(a, b) = d(b, a). Throws std::invalid_argument for negative or
  /// non-finite miles, or a nonzero self distance.
  void set(const std::string& a, const std::string& b, double miles);

  /// Throws std::out_of_range when the pair is unknown.
  double at(const std::string& a, const std::string& b) const;
  bool contains(const std::string& a, const std::string& b) const;

  /// Every location mentioned in at least one pair.
  std::vector<std::string> locations() const;

  /// Canonical pairs (a < b), sorted.
  const std::map<std::pair<std::string, std::string>, double>& pairs() const { return miles_; }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
  std::map<std::pair<std::string, std::string>, double> miles_;
};

struct Instance {
  std::vector<Commodity> commodities;
  std::vector<Facility> facilities;
  std::vector<DemandPoint> demand_points;
  DistanceMatrix distances;
  ScenarioTree tree;

  const Commodity& commodity(const std::string& id) const;
  const Facility& facility(const std::string& id) const;
  const DemandPoint& demand_point(const std::string& id) const;
};

struct LatLon {
  double lat = 0;  ///< degrees, [-90, 90]
  double lon = 0;  ///< degrees, [-180, 180]
};

inline constexpr double kEarthRadiusMiles = 3958.8;

/// Haversine distance in miles. Throws std::invalid_argument for coordinates
/// out of range.
double great_circle_distance(LatLon a, LatLon b);

/// o_ij^c = transport_rate(c) * distance(location(i), location(j)).
/// Throws std::out_of_range for unknown ids or a missing distance.
double transport_cost(const Instance& inst, const std::string& commodity, const std::string& facility,
                      const std::string& demand_point);

/// All type invariants and cross references, tree violations included
/// (prefixed "tree: "). Empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

}  // namespace prepos
