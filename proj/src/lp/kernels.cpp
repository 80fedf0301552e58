#include "prepos/lp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prepos::lp {

CscMatrix to_csc(const Problem& p) {
  CscMatrix m;
  m.rows = p.num_rows();
  m.cols = p.num_columns();
  m.start.assign(static_cast<std::size_t>(m.cols) + 1, 0);
  for (const auto& row : p.rows)
    for (const auto& e : row.entries) {
      if (e.column < 0 || e.column >= m.cols) throw std::out_of_range("row references unknown column");
      ++m.start[static_cast<std::size_t>(e.column) + 1];
    }
  for (int j = 0; j < m.cols; ++j) m.start[j + 1] += m.start[j];
  m.index.resize(static_cast<std::size_t>(m.start.back()));
  m.value.resize(m.index.size());
  std::vector<int> fill(m.start.begin(), m.start.end() - 1);
  for (int r = 0; r < m.rows; ++r)
    for (const auto& e : p.rows[r].entries) {
      int pos = fill[e.column]++;
      m.index[pos] = r;
      m.value[pos] = e.value;
    }
  return m;
}

CsrMatrix to_csr(const Problem& p) {
  CsrMatrix m;
  m.rows = p.num_rows();
  m.cols = p.num_columns();
  m.start.reserve(static_cast<std::size_t>(m.rows) + 1);
  m.start.push_back(0);
  for (const auto& row : p.rows) {
    for (const auto& e : row.entries) {
      m.index.push_back(e.column);
      m.value.push_back(e.value);
    }
    m.start.push_back(static_cast<int>(m.index.size()));
  }
  return m;
}

namespace {

inline double reduced_cost(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals, int j) {
  double d = cost[j];
  for (int k = a.start[j]; k < a.start[j + 1]; ++k) d -= duals[a.index[k]] * a.value[k];
  return d;
}

inline bool better(const PricingResult& lhs, const PricingResult& rhs) {
  if (lhs.column < 0) return false;
  if (rhs.column < 0) return true;
  if (lhs.reduced_cost != rhs.reduced_cost) return lhs.reduced_cost < rhs.reduced_cost;
  return lhs.column < rhs.column;
}

}  // namespace

PricingResult price_dantzig_serial(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                                   std::span<const char> eligible, double tolerance) {
  PricingResult best;
  for (int j = 0; j < a.cols; ++j) {
    if (!eligible[j]) continue;
    double d = reduced_cost(a, cost, duals, j);
    if (d < -tolerance && (best.column < 0 || d < best.reduced_cost)) best = {j, d};
  }
  return best;
}

PricingResult price_dantzig_parallel(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                                     std::span<const char> eligible, double tolerance) {
  PricingResult best;
#pragma omp parallel
  {
    PricingResult local;
#pragma omp for schedule(static) nowait
    for (int j = 0; j < a.cols; ++j) {
      if (!eligible[j]) continue;
      double d = reduced_cost(a, cost, duals, j);
      if (d < -tolerance && (local.column < 0 || d < local.reduced_cost)) local = {j, d};
    }
#pragma omp critical(prepos_pricing)
    {
      if (better(local, best)) best = local;
    }
  }
  return best;
}

PricingResult price_bland(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                          std::span<const char> eligible, double tolerance) {
  for (int j = 0; j < a.cols; ++j) {
    if (!eligible[j]) continue;
    double d = reduced_cost(a, cost, duals, j);
    if (d < -tolerance) return {j, d};
  }
  return {};
}

void row_activity_serial(const CsrMatrix& a, std::span<const double> x, std::span<double> out) {
  for (int r = 0; r < a.rows; ++r) {
    double s = 0.0;
    for (int k = a.start[r]; k < a.start[r + 1]; ++k) s += a.value[k] * x[a.index[k]];
    out[r] = s;
  }
}

void row_activity_parallel(const CsrMatrix& a, std::span<const double> x, std::span<double> out) {
#pragma omp parallel for schedule(static)
  for (int r = 0; r < a.rows; ++r) {
    double s = 0.0;
    for (int k = a.start[r]; k < a.start[r + 1]; ++k) s += a.value[k] * x[a.index[k]];
    out[r] = s;
  }
}

double max_violation(const Problem& p, std::span<const double> x, bool parallel) {
  if (static_cast<int>(x.size()) != p.num_columns()) throw std::invalid_argument("value vector size mismatch");
  CsrMatrix a = to_csr(p);
  std::vector<double> act(static_cast<std::size_t>(a.rows));
  if (parallel)
    row_activity_parallel(a, x, act);
  else
    row_activity_serial(a, x, act);

  double worst = 0.0;
  for (int r = 0; r < a.rows; ++r) {
    double diff = act[r] - p.rows[r].rhs;
    worst = std::max(worst, p.rows[r].sense == Sense::Equal ? std::abs(diff) : std::max(0.0, diff));
  }
  for (int j = 0; j < p.num_columns(); ++j) {
    worst = std::max(worst, -x[j]);
    if (p.fixed_zero[j]) worst = std::max(worst, std::abs(x[j]));
  }
  return worst;
}

}  // namespace prepos::lp
