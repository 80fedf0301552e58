#include "prepos/formulation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prepos {

namespace {

std::string idx(char tag, int zero_based) { return std::string(1, tag) + std::to_string(zero_based + 1); }

}  // namespace

std::string VariableKey::name() const {
  const std::string sfx = "_s" + std::to_string(s.value);
  switch (kind) {
    case VarKind::X:
      return "X_" + idx('c', c) + "_" + idx('i', i) + sfx;
    case VarKind::Y:
      return "Y_" + idx('c', c) + "_" + idx('i', i) + "_" + idx('j', j) + "_t" + std::to_string(t) + sfx;
    case VarKind::G:
      return "G_" + idx('c', c) + "_" + idx('j', j) + sfx;
    case VarKind::H:
      return "H_" + idx('c', c) + "_" + idx('i', i) + "_t" + std::to_string(t) + sfx;
  }
  return {};
}

std::size_t VariableKeyHash::operator()(const VariableKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.kind);
  for (std::size_t part : {static_cast<std::size_t>(k.c + 1), static_cast<std::size_t>(k.i + 1),
                           static_cast<std::size_t>(k.j + 1), static_cast<std::size_t>(k.t),
                           static_cast<std::size_t>(k.s.value)}) {
    h = h * 1000003u ^ part;
  }
  return h;
}

const char* to_string(RowTag tag) {
  switch (tag) {
    case RowTag::RootStock: return "root_stock";
    case RowTag::Procurement: return "procurement";
    case RowTag::Aging: return "aging";
    case RowTag::Capacity: return "capacity";
    case RowTag::Shortage: return "shortage";
  }
  return "?";
}

int LinearProgram::column(const VariableKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw std::out_of_range("no column for " + key.name());
  return it->second;
}

int LinearProgram::count(VarKind kind) const {
  int n = 0;
  for (const auto& k : keys) n += k.kind == kind;
  return n;
}

int LinearProgram::count(RowTag tag) const {
  int n = 0;
  for (auto t : row_tags) n += t == tag;
  return n;
}

int LinearProgram::count_fixed() const {
  return static_cast<int>(std::count(problem.fixed_zero.begin(), problem.fixed_zero.end(), 1));
}

int LinearProgram::add_column(const VariableKey& key, const std::array<double, kNumCostTerms>& terms, bool fixed) {
  double total = 0.0;
  for (double v : terms) total += v;
  int col = problem.add_column(key.name(), total, fixed);
  keys.push_back(key);
  term_cost.push_back(terms);
  index_.emplace(key, col);
  return col;
}

LinearProgram build_lp(const Instance& inst, const FormulationOptions& opts) {
  if (auto issues = validate_instance(inst); !issues.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw std::invalid_argument(msg);
  }

  const auto& tree = inst.tree;
  const int C = static_cast<int>(inst.commodities.size());
  const int I = static_cast<int>(inst.facilities.size());
  const int J = static_cast<int>(inst.demand_points.size());
  const auto nodes = tree.nodes();

  // o_ij^c, looked up once
  std::vector<double> transport(static_cast<std::size_t>(C * I * J));
  for (int c = 0; c < C; ++c)
    for (int i = 0; i < I; ++i)
      for (int j = 0; j < J; ++j)
        transport[static_cast<std::size_t>((c * I + i) * J + j)] =
            inst.commodities[c].transport_rate *
            inst.distances.at(inst.facilities[i].location, inst.demand_points[j].location);

  LinearProgram lp;
  using Terms = std::array<double, kNumCostTerms>;
  auto term = [](CostTerm which, double value) {
    Terms t{};
    t[static_cast<std::size_t>(which)] = value;
    return t;
  };

  for (int c = 0; c < C; ++c)
    for (int i = 0; i < I; ++i)
      for (const auto& n : nodes)
        lp.add_column(VariableKey::x(c, i, n.id), term(CostTerm::Q, n.probability * inst.commodities[c].acquisition_cost),
                      false);

  for (int c = 0; c < C; ++c) {
    const int T = inst.commodities[c].lifetime_periods;
    for (int i = 0; i < I; ++i)
      for (int j = 0; j < J; ++j)
        for (int t = 1; t <= T; ++t)
          for (const auto& n : nodes) {
            // fresh stock cannot ship in its purchase period
            bool fixed = t == 1 || (opts.forbid_ship_at_expiry && t == T);
            lp.add_column(VariableKey::y(c, i, j, t, n.id),
                          term(CostTerm::O, n.probability * transport[static_cast<std::size_t>((c * I + i) * J + j)]),
                          fixed);
          }
  }

  for (int c = 0; c < C; ++c)
    for (int j = 0; j < J; ++j)
      for (const auto& n : nodes)
        lp.add_column(VariableKey::g(c, j, n.id), term(CostTerm::V, n.probability * inst.commodities[c].penalty_cost),
                      false);

  for (int c = 0; c < C; ++c) {
    const auto& com = inst.commodities[c];
    for (int i = 0; i < I; ++i)
      for (int t = 1; t <= com.lifetime_periods; ++t)
        for (const auto& n : nodes) {
          Terms terms{};
          terms[static_cast<std::size_t>(CostTerm::U)] = n.probability * com.holding_cost;
          if (t == com.lifetime_periods) terms[static_cast<std::size_t>(CostTerm::R)] = n.probability * com.removal_cost;
          lp.add_column(VariableKey::h(c, i, t, n.id), terms, false);
        }
  }

  auto add_row = [&](RowTag tag, std::string name, std::vector<lp::Entry> entries, lp::Sense sense, double rhs) {
    lp.problem.rows.push_back(lp::Row{std::move(entries), sense, rhs, std::move(name)});
    lp.row_tags.push_back(tag);
  };
  auto sfx = [](NodeId s) { return "_s" + std::to_string(s.value); };
  const NodeId root(1);

  // nothing but fresh stock exists at the root
  for (int c = 0; c < C; ++c)
    for (int i = 0; i < I; ++i)
      for (int t = 2; t <= inst.commodities[c].lifetime_periods; ++t)
        add_row(RowTag::RootStock, "root_stock_" + idx('c', c) + "_" + idx('i', i) + "_t" + std::to_string(t),
                {{lp.column(VariableKey::h(c, i, t, root)), 1.0}}, lp::Sense::Equal, 0.0);

  // fresh cohort equals procurement
  for (int c = 0; c < C; ++c)
    for (int i = 0; i < I; ++i)
      for (const auto& n : nodes)
        add_row(RowTag::Procurement, "procurement_" + idx('c', c) + "_" + idx('i', i) + sfx(n.id),
                {{lp.column(VariableKey::h(c, i, 1, n.id)), 1.0}, {lp.column(VariableKey::x(c, i, n.id)), -1.0}},
                lp::Sense::Equal, 0.0);

  // aging: cohort t here is the parent's cohort t-1 minus shipments
  for (int c = 0; c < C; ++c)
    for (int i = 0; i < I; ++i)
      for (int t = 2; t <= inst.commodities[c].lifetime_periods; ++t)
        for (const auto& n : nodes) {
          if (!n.parent) continue;
          std::vector<lp::Entry> e;
          e.reserve(static_cast<std::size_t>(J) + 2);
          e.push_back({lp.column(VariableKey::h(c, i, t, n.id)), 1.0});
          e.push_back({lp.column(VariableKey::h(c, i, t - 1, *n.parent)), -1.0});
          for (int j = 0; j < J; ++j) e.push_back({lp.column(VariableKey::y(c, i, j, t, n.id)), 1.0});
          add_row(RowTag::Aging, "aging_" + idx('c', c) + "_" + idx('i', i) + "_t" + std::to_string(t) + sfx(n.id),
                  std::move(e), lp::Sense::Equal, 0.0);
        }

  // facility space
  for (int i = 0; i < I; ++i)
    for (const auto& n : nodes) {
      std::vector<lp::Entry> e;
      for (int c = 0; c < C; ++c)
        for (int t = 1; t <= inst.commodities[c].lifetime_periods; ++t)
          e.push_back({lp.column(VariableKey::h(c, i, t, n.id)), inst.commodities[c].unit_space});
      add_row(RowTag::Capacity, "capacity_" + idx('i', i) + sfx(n.id), std::move(e), lp::Sense::LessEqual,
              inst.facilities[i].capacity);
    }

  // shortage is unmet demand
  for (int c = 0; c < C; ++c)
    for (int j = 0; j < J; ++j)
      for (const auto& n : nodes) {
        std::vector<lp::Entry> e;
        e.push_back({lp.column(VariableKey::g(c, j, n.id)), 1.0});
        for (int i = 0; i < I; ++i)
          for (int t = 1; t <= inst.commodities[c].lifetime_periods; ++t)
            e.push_back({lp.column(VariableKey::y(c, i, j, t, n.id)), 1.0});
        add_row(RowTag::Shortage, "shortage_" + idx('c', c) + "_" + idx('j', j) + sfx(n.id), std::move(e), lp::Sense::Equal,
                n.demand_for(inst.commodities[c].id, inst.demand_points[j].id));
      }

  return lp;
}

CostBreakdown decompose_costs(const LinearProgram& lp, std::span<const double> values) {
  if (values.size() != lp.term_cost.size()) {
    throw std::invalid_argument("expected " + std::to_string(lp.term_cost.size()) + " column values, got " +
                                std::to_string(values.size()));
  }
  std::array<double, kNumCostTerms> sum{};
  for (std::size_t col = 0; col < values.size(); ++col) {
    if (values[col] == 0.0) continue;
    for (std::size_t k = 0; k < kNumCostTerms; ++k) sum[k] += lp.term_cost[col][k] * values[col];
  }
  CostBreakdown b{sum[0], sum[1], sum[2], sum[3], sum[4], 0.0};
  b.total = b.Q + b.O + b.U + b.V + b.R;
  return b;
}

std::map<ExpiredKey, double> expired_inventory(const Instance& inst, const LinearProgram& lp,
                                               std::span<const double> values, double threshold) {
  if (values.size() != lp.keys.size()) {
    throw std::invalid_argument("expected " + std::to_string(lp.keys.size()) + " column values, got " +
                                std::to_string(values.size()));
  }
  std::map<ExpiredKey, double> out;
  for (std::size_t col = 0; col < lp.keys.size(); ++col) {
    const auto& k = lp.keys[col];
    if (k.kind != VarKind::H) continue;
    const auto& com = inst.commodities.at(static_cast<std::size_t>(k.c));
    if (k.t != com.lifetime_periods || values[col] <= threshold) continue;
    out[{com.id, inst.facilities.at(static_cast<std::size_t>(k.i)).id, k.s}] = values[col];
  }
  return out;
}

}  // namespace prepos
