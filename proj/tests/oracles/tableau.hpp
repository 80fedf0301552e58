#pragma once

// Dense two-phase tableau simplex with Bland's rule. Test-only reference; it
// shares nothing with the library solver beyond the Problem struct.

#include <cmath>
#include <optional>
#include <vector>

#include "prepos/lp/problem.hpp"

namespace prepos::oracle {

struct TableauResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  double objective = 0;
  std::vector<double> x;
};

namespace tableau_detail {

constexpr double kEps = 1e-10;

struct Tableau {
  int m = 0;
  int n = 0;                           // columns excluding rhs
  std::vector<std::vector<double>> t;  // m rows + objective row, n + 1 entries
  std::vector<int> basis;

  void pivot(int r, int c) {
    double piv = t[r][c];
    for (double& v : t[r]) v /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == r || t[i][c] == 0.0) continue;
      double f = t[i][c];
      for (int k = 0; k <= n; ++k) t[i][k] -= f * t[r][k];
    }
    basis[r] = c;
  }

  // Minimizes the objective row; allowed[c] masks entering columns.
  bool optimize(const std::vector<char>& allowed) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < n; ++c)
        if (allowed[c] && t[m][c] < -kEps) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= kEps) continue;
        double ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best - 1e-12 || (std::abs(ratio - best) <= 1e-12 && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace tableau_detail

inline TableauResult tableau_solve(const lp::Problem& p) {
  const int m = p.num_rows();
  const int nx = p.num_columns();
  int slacks = 0;
  for (const auto& row : p.rows) slacks += row.sense == lp::Sense::LessEqual;
  const int n = nx + slacks + m;  // structurals, slacks, one artificial per row

  tableau_detail::Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(static_cast<std::size_t>(m) + 1, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
  tab.basis.assign(static_cast<std::size_t>(m), -1);
  int slack = nx;
  for (int r = 0; r < m; ++r) {
    const auto& row = p.rows[r];
    double sign = row.rhs < 0 ? -1.0 : 1.0;
    for (const auto& e : row.entries) tab.t[r][e.column] += sign * e.value;
    if (row.sense == lp::Sense::LessEqual) tab.t[r][slack++] = sign;
    tab.t[r][nx + slacks + r] = 1.0;
    tab.t[r][n] = sign * row.rhs;
    tab.basis[r] = nx + slacks + r;
  }

  std::vector<char> allowed(static_cast<std::size_t>(n), 1);
  for (int j = 0; j < nx; ++j)
    if (p.fixed_zero[j]) allowed[j] = 0;

  // Phase 1: minimize the sum of artificials.
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) tab.t[m][k] -= tab.t[r][k];
  for (int r = 0; r < m; ++r) tab.t[m][nx + slacks + r] = 0.0;
  tab.optimize(allowed);
  TableauResult res;
  double scale = 1.0;
  for (const auto& row : p.rows) scale = std::max(scale, std::abs(row.rhs));
  if (-tab.t[m][n] > 1e-8 * scale) return res;

  // Drive zero-level artificials out where possible.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nx + slacks) continue;
    for (int c = 0; c < nx + slacks; ++c)
      if (allowed[c] && std::abs(tab.t[r][c]) > 1e-9) {
        tab.pivot(r, c);
        break;
      }
  }
  for (int r = 0; r < m; ++r) allowed[nx + slacks + r] = 0;

  // Phase 2 objective row: c - c_B B^-1 A.
  std::fill(tab.t[m].begin(), tab.t[m].end(), 0.0);
  for (int j = 0; j < nx; ++j) tab.t[m][j] = p.cost[j];
  for (int r = 0; r < m; ++r) {
    int b = tab.basis[r];
    double cb = b < nx ? p.cost[b] : 0.0;
    if (cb == 0.0) continue;
    for (int k = 0; k <= n; ++k) tab.t[m][k] -= cb * tab.t[r][k];
  }
  if (!tab.optimize(allowed)) {
    res.status = TableauResult::Status::Unbounded;
    return res;
  }
  res.status = TableauResult::Status::Optimal;
  res.x.assign(static_cast<std::size_t>(nx), 0.0);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < nx) res.x[tab.basis[r]] = tab.t[r][n];
  for (int j = 0; j < nx; ++j) res.objective += p.cost[j] * res.x[j];
  return res;
}

}  // namespace prepos::oracle
