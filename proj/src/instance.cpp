#include "prepos/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "prepos/detail/numeric_text.hpp"

namespace prepos {

std::pair<std::string, std::string> DistanceMatrix::key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void DistanceMatrix::set(const std::string& a, const std::string& b, double miles) {
  if (!(miles >= 0.0) || !std::isfinite(miles)) {
    throw std::invalid_argument("distance " + a + "-" + b + " must be a nonnegative number");
  }
  if (a == b) {
    if (miles != 0.0) throw std::invalid_argument("self distance of " + a + " must be 0");
    return;
  }
  miles_[key(a, b)] = miles;
}

double DistanceMatrix::at(const std::string& a, const std::string& b) const {
  if (a == b) return 0.0;
  auto it = miles_.find(key(a, b));
  if (it == miles_.end()) throw std::out_of_range("no distance between " + a + " and " + b);
  return it->second;
}

bool DistanceMatrix::contains(const std::string& a, const std::string& b) const {
  return a == b || miles_.count(key(a, b)) > 0;
}

std::vector<std::string> DistanceMatrix::locations() const {
  std::set<std::string> seen;
  for (const auto& [k, _] : miles_) {
    seen.insert(k.first);
    seen.insert(k.second);
  }
  return {seen.begin(), seen.end()};
}

namespace {

template <class T>
const T& find_by_id(const std::vector<T>& items, const std::string& id, const char* what) {
  for (const auto& item : items) {
    if (item.id == id) return item;
  }
  throw std::out_of_range(std::string("unknown ") + what + " '" + id + "'");
}

}  // namespace

const Commodity& Instance::commodity(const std::string& id) const { return find_by_id(commodities, id, "commodity"); }
const Facility& Instance::facility(const std::string& id) const { return find_by_id(facilities, id, "facility"); }
const DemandPoint& Instance::demand_point(const std::string& id) const {
  return find_by_id(demand_points, id, "demand point");
}

double great_circle_distance(LatLon a, LatLon b) {
  for (const LatLon& p : {a, b}) {
    if (!(p.lat >= -90.0 && p.lat <= 90.0) || !(p.lon >= -180.0 && p.lon <= 180.0)) {
      throw std::invalid_argument("coordinate out of range: (" + detail::compact(p.lat) + ", " +
                                  detail::compact(p.lon) + ")");
    }
  }
  constexpr double deg = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * deg;
  const double dlon = (b.lon - a.lon) * deg;
  const double s1 = std::sin(dlat / 2);
  const double s2 = std::sin(dlon / 2);
  double h = s1 * s1 + std::cos(a.lat * deg) * std::cos(b.lat * deg) * s2 * s2;
  h = std::min(1.0, h);
  return 2.0 * kEarthRadiusMiles * std::asin(std::sqrt(h));
}

double transport_cost(const Instance& inst, const std::string& commodity, const std::string& facility,
                      const std::string& demand_point) {
  const auto& c = inst.commodity(commodity);
  const auto& i = inst.facility(facility);
  const auto& j = inst.demand_point(demand_point);
  return c.transport_rate * inst.distances.at(i.location, j.location);
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  auto positive = [&](double v, const std::string& what) {
    if (!(v > 0.0) || !std::isfinite(v)) out.push_back(what + " must be positive, got " + detail::compact(v));
  };

  std::set<std::string> commodity_ids;
  for (const auto& c : inst.commodities) {
    if (c.id.empty()) out.push_back("commodity with empty id");
    if (!commodity_ids.insert(c.id).second) out.push_back("duplicate commodity id '" + c.id + "'");
    if (c.lifetime_periods < 1) out.push_back("commodity " + c.id + ": lifetime_periods must be >= 1");
    positive(c.acquisition_cost, "commodity " + c.id + ": acquisition cost");
    positive(c.holding_cost, "commodity " + c.id + ": holding cost");
    positive(c.penalty_cost, "commodity " + c.id + ": penalty cost");
    positive(c.removal_cost, "commodity " + c.id + ": removal cost");
    positive(c.unit_space, "commodity " + c.id + ": unit space");
    positive(c.transport_rate, "commodity " + c.id + ": transport rate");
  }
  if (inst.commodities.empty()) out.push_back("no commodities");

  std::set<std::string> facility_ids;
  for (const auto& f : inst.facilities) {
    if (!facility_ids.insert(f.id).second) out.push_back("duplicate facility id '" + f.id + "'");
    positive(f.capacity, "facility " + f.id + ": capacity");
  }
  if (inst.facilities.empty()) out.push_back("no facilities");

  std::set<std::string> point_ids;
  for (const auto& j : inst.demand_points) {
    if (!point_ids.insert(j.id).second) out.push_back("duplicate demand point id '" + j.id + "'");
  }
  if (inst.demand_points.empty()) out.push_back("no demand points");

  for (const auto& f : inst.facilities) {
    for (const auto& j : inst.demand_points) {
      if (!inst.distances.contains(f.location, j.location)) {
        out.push_back("missing distance between " + f.location + " and " + j.location);
      }
    }
  }

  for (const auto& n : inst.tree.nodes()) {
    for (const auto& [key, units] : n.demand) {
      if (!commodity_ids.count(key.first)) {
        out.push_back("node " + std::to_string(n.id.value) + ": demand references undeclared commodity '" +
                      key.first + "'");
      }
      if (!point_ids.count(key.second)) {
        out.push_back("node " + std::to_string(n.id.value) + ": demand references undeclared demand point '" +
                      key.second + "'");
      }
    }
  }

  for (auto& v : validate_tree(inst.tree).violations) out.push_back("tree: " + v);
  return out;
}

}  // namespace prepos
