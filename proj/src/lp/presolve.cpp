#include "presolve.hpp"

#include <cmath>

namespace prepos::lp::detail {

std::vector<double> PresolveResult::postsolve(const std::vector<double>& reduced_values) const {
  std::vector<double> x = fixed_value;
  for (std::size_t k = 0; k < kept_columns.size(); ++k) x[static_cast<std::size_t>(kept_columns[k])] = reduced_values[k];
  return x;
}

PresolveResult presolve(const Problem& p, double tolerance) {
  using Outcome = PresolveResult::Outcome;
  const int n = p.num_columns();
  const int m = p.num_rows();

  PresolveResult res;
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  res.fixed_value.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) fixed[j] = p.fixed_zero[j] ? 1 : 0;
  std::vector<char> row_active(static_cast<std::size_t>(m), 1);

  auto fix = [&](int j, double v) {
    fixed[j] = 1;
    res.fixed_value[j] = v;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < m; ++r) {
      if (!row_active[r]) continue;
      const Row& row = p.rows[r];
      double rhs = row.rhs;
      int live = 0;
      int last = -1;
      double last_coef = 0.0;
      bool any_pos = false;
      bool any_neg = false;
      for (const auto& e : row.entries) {
        if (e.value == 0.0) continue;
        if (fixed[e.column]) {
          rhs -= e.value * res.fixed_value[e.column];
          continue;
        }
        ++live;
        last = e.column;
        last_coef = e.value;
        (e.value > 0 ? any_pos : any_neg) = true;
      }
      const double scale = 1.0 + std::abs(row.rhs);
      const bool eq = row.sense == Sense::Equal;

      if (live == 0) {
        bool ok = eq ? std::abs(rhs) <= tolerance * scale : rhs >= -tolerance * scale;
        if (!ok) {
          res.outcome = Outcome::Infeasible;
          return res;
        }
        row_active[r] = 0;
        changed = true;
        continue;
      }
      if (eq && live == 1) {
        double v = rhs / last_coef;
        if (v < -tolerance * scale) {
          res.outcome = Outcome::Infeasible;
          return res;
        }
        fix(last, std::max(0.0, v));
        row_active[r] = 0;
        changed = true;
        continue;
      }
      const bool zero_rhs = std::abs(rhs) <= tolerance * scale;
      if ((zero_rhs && !any_neg) || (eq && zero_rhs && !any_pos)) {
        for (const auto& e : row.entries)
          if (e.value != 0.0 && !fixed[e.column]) fix(e.column, 0.0);
        row_active[r] = 0;
        changed = true;
        continue;
      }
      if (!eq && !any_pos && rhs >= 0.0) {  // sum of nonpositive terms <= rhs
        row_active[r] = 0;
        changed = true;
        continue;
      }
      if ((eq && rhs > tolerance * scale && !any_pos) || (rhs < -tolerance * scale && !any_neg)) {
        res.outcome = Outcome::Infeasible;
        return res;
      }
    }
  }

  std::vector<int> appearances(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < m; ++r) {
    if (!row_active[r]) continue;
    for (const auto& e : p.rows[r].entries)
      if (e.value != 0.0 && !fixed[e.column]) ++appearances[e.column];
  }
  for (int j = 0; j < n; ++j) {
    if (fixed[j] || appearances[j] > 0) continue;
    if (p.cost[j] < 0.0) {
      res.outcome = Outcome::Unbounded;
      return res;
    }
    fix(j, 0.0);
  }

  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) {
      res.objective_offset += p.cost[j] * res.fixed_value[j];
      continue;
    }
    new_index[j] = static_cast<int>(res.kept_columns.size());
    res.kept_columns.push_back(j);
    res.reduced.add_column(p.column_names[j], p.cost[j]);
  }
  for (int r = 0; r < m; ++r) {
    if (!row_active[r]) continue;
    const Row& row = p.rows[r];
    Row out{{}, row.sense, row.rhs, row.name};
    for (const auto& e : row.entries) {
      if (e.value == 0.0) continue;
      if (fixed[e.column])
        out.rhs -= e.value * res.fixed_value[e.column];
      else
        out.entries.push_back({new_index[e.column], e.value});
    }
    res.kept_rows.push_back(r);
    res.reduced.rows.push_back(std::move(out));
  }
  return res;
}

}  // namespace prepos::lp::detail
