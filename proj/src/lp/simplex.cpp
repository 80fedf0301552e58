#include "prepos/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "basis.hpp"
#include "presolve.hpp"
#include "prepos/lp/kernels.hpp"

namespace prepos::lp {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::IterationLimit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTolerance = 1e-9;

enum class ColumnKind : char { Structural, Slack, Artificial };

// min c'x, A x = b, x >= 0 with b >= 0, plus the starting basis.
struct StandardForm {
  CscMatrix a;
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<ColumnKind> kind;
  std::vector<int> basic;
  int structurals = 0;
};

StandardForm standardize(const Problem& p) {
  const int m = p.num_rows();
  const int n = p.num_columns();
  StandardForm sf;
  sf.structurals = n;
  sf.b.resize(static_cast<std::size_t>(m));

  std::vector<double> sign(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    sign[r] = p.rows[r].rhs < 0 ? -1.0 : 1.0;
    sf.b[r] = sign[r] * p.rows[r].rhs;
  }

  CscMatrix base = to_csc(p);
  for (int j = 0; j < n; ++j)
    for (int k = base.start[j]; k < base.start[j + 1]; ++k) base.value[k] *= sign[base.index[k]];

  sf.cost = p.cost;
  sf.kind.assign(static_cast<std::size_t>(n), ColumnKind::Structural);
  sf.basic.assign(static_cast<std::size_t>(m), -1);

  // Slack columns, one per <= row.
  std::vector<int> extra_row;
  std::vector<double> extra_val;
  for (int r = 0; r < m; ++r) {
    if (p.rows[r].sense != Sense::LessEqual) continue;
    int col = n + static_cast<int>(extra_row.size());
    extra_row.push_back(r);
    extra_val.push_back(sign[r]);
    sf.cost.push_back(0.0);
    sf.kind.push_back(ColumnKind::Slack);
    if (sign[r] > 0) sf.basic[r] = col;
  }

  // Structural singletons with a positive coefficient can start basic.
  for (int j = 0; j < n; ++j) {
    if (base.start[j + 1] - base.start[j] != 1) continue;
    int k = base.start[j];
    int r = base.index[k];
    if (sf.basic[r] < 0 && base.value[k] > 0) sf.basic[r] = j;
  }

  for (int r = 0; r < m; ++r) {
    if (sf.basic[r] >= 0) continue;
    int col = n + static_cast<int>(extra_row.size());
    extra_row.push_back(r);
    extra_val.push_back(1.0);
    sf.cost.push_back(0.0);
    sf.kind.push_back(ColumnKind::Artificial);
    sf.basic[r] = col;
  }

  sf.a = std::move(base);
  sf.a.cols = n + static_cast<int>(extra_row.size());
  for (std::size_t e = 0; e < extra_row.size(); ++e) {
    sf.a.index.push_back(extra_row[e]);
    sf.a.value.push_back(extra_val[e]);
    sf.a.start.push_back(static_cast<int>(sf.a.index.size()));
  }
  return sf;
}

enum class PhaseResult { Optimal, Unbounded, IterationLimit };

class Simplex {
 public:
  Simplex(StandardForm& sf, const SolveOptions& opts) : sf_(sf), opts_(opts) {
    m_ = static_cast<int>(sf_.b.size());
    in_basis_.assign(static_cast<std::size_t>(sf_.a.cols), 0);
    for (int j : sf_.basic) in_basis_[j] = 1;
    locked_.assign(static_cast<std::size_t>(m_), 0);
    refactor();
  }

  PhaseResult run(const std::vector<double>& cost, const std::vector<char>& allowed) {
    std::vector<char> eligible(static_cast<std::size_t>(sf_.a.cols));
    std::vector<double> duals(static_cast<std::size_t>(m_));
    std::vector<double> alpha(static_cast<std::size_t>(m_));
    int stalled = 0;

    while (true) {
      if (iterations_ >= opts_.max_iterations) return PhaseResult::IterationLimit;

      for (int r = 0; r < m_; ++r) duals[r] = cost[sf_.basic[r]];
      basis_.btran(duals);
      for (int j = 0; j < sf_.a.cols; ++j) eligible[j] = allowed[j] && !in_basis_[j];

      const bool bland = stalled >= opts_.stall_threshold;
      PricingResult enter;
      if (bland)
        enter = price_bland(sf_.a, cost, duals, eligible, opts_.optimality_tolerance);
      else if (opts_.parallel_pricing)
        enter = price_dantzig_parallel(sf_.a, cost, duals, eligible, opts_.optimality_tolerance);
      else
        enter = price_dantzig_serial(sf_.a, cost, duals, eligible, opts_.optimality_tolerance);
      if (enter.column < 0) return PhaseResult::Optimal;

      const int q = enter.column;
      std::fill(alpha.begin(), alpha.end(), 0.0);
      for (int k = sf_.a.start[q]; k < sf_.a.start[q + 1]; ++k) alpha[sf_.a.index[k]] = sf_.a.value[k];
      basis_.ftran(alpha);

      int leave = -1;
      double theta = 0.0;
      for (int r = 0; r < m_; ++r) {
        double ratio;
        if (locked_[r]) {
          if (std::abs(alpha[r]) <= kPivotTolerance) continue;
          ratio = 0.0;
        } else {
          if (alpha[r] <= kPivotTolerance) continue;
          ratio = std::max(0.0, xb_[r]) / alpha[r];
        }
        if (leave < 0 || ratio < theta || (ratio == theta && sf_.basic[r] < sf_.basic[leave])) {
          leave = r;
          theta = ratio;
        }
      }
      if (leave < 0) return PhaseResult::Unbounded;

      for (int r = 0; r < m_; ++r) xb_[r] -= theta * alpha[r];
      xb_[leave] = theta;
      in_basis_[sf_.basic[leave]] = 0;
      in_basis_[q] = 1;
      sf_.basic[leave] = q;
      locked_[leave] = 0;
      ++iterations_;

      if (theta * -enter.reduced_cost > 0.0)
        stalled = 0;
      else
        ++stalled;

      if (basis_.num_etas() + 1 >= opts_.refactor_interval)
        refactor();
      else
        basis_.push_eta(leave, alpha);
    }
  }

  void refactor() {
    if (!basis_.factorize(sf_.a, sf_.basic)) throw std::runtime_error("simplex basis became singular");
    xb_ = sf_.b;
    basis_.ftran(xb_);
  }

  // Basic artificials that survived phase 1 stay pinned at zero.
  void lock_artificials() {
    for (int r = 0; r < m_; ++r)
      if (sf_.kind[sf_.basic[r]] == ColumnKind::Artificial) {
        locked_[r] = 1;
        xb_[r] = 0.0;
      }
  }

  const std::vector<double>& basic_values() const { return xb_; }
  std::int64_t iterations() const { return iterations_; }

 private:
  StandardForm& sf_;
  const SolveOptions& opts_;
  int m_ = 0;
  detail::BasisFactor basis_;
  std::vector<double> xb_;
  std::vector<char> in_basis_;
  std::vector<char> locked_;
  std::int64_t iterations_ = 0;
};

Solution finish(const Problem& p, const detail::PresolveResult& pre, std::vector<double> reduced_values,
                SolveStatus status, std::int64_t iterations) {
  Solution sol;
  sol.status = status;
  sol.iterations = iterations;
  sol.values = pre.postsolve(reduced_values);
  for (double& v : sol.values)
    if (v < 0.0) v = 0.0;
  for (int j = 0; j < p.num_columns(); ++j) sol.objective += p.cost[j] * sol.values[j];
  sol.max_residual = max_violation(p, sol.values, false);
  return sol;
}

}  // namespace

Solution solve(const Problem& p, const SolveOptions& opts) {
  if (!(opts.feasibility_tolerance > 0) || !(opts.optimality_tolerance > 0) || opts.max_iterations <= 0 ||
      opts.refactor_interval <= 0 || opts.stall_threshold <= 0)
    throw std::invalid_argument("solve options must be positive");

  const int n = p.num_columns();
  detail::PresolveResult pre = detail::presolve(p, opts.feasibility_tolerance);
  if (pre.outcome != detail::PresolveResult::Outcome::Reduced) {
    Solution sol;
    sol.status = pre.outcome == detail::PresolveResult::Outcome::Infeasible ? SolveStatus::Infeasible
                                                                            : SolveStatus::Unbounded;
    sol.values.assign(static_cast<std::size_t>(n), 0.0);
    return sol;
  }

  const Problem& rp = pre.reduced;
  if (rp.num_rows() == 0)
    return finish(p, pre, std::vector<double>(static_cast<std::size_t>(rp.num_columns()), 0.0), SolveStatus::Optimal, 0);

  StandardForm sf = standardize(rp);
  Simplex simplex(sf, opts);
  const int total = sf.a.cols;

  auto extract = [&] {
    std::vector<double> x(static_cast<std::size_t>(rp.num_columns()), 0.0);
    const auto& xb = simplex.basic_values();
    for (std::size_t r = 0; r < sf.basic.size(); ++r)
      if (sf.basic[r] < sf.structurals) x[static_cast<std::size_t>(sf.basic[r])] = xb[r];
    return x;
  };

  const bool need_phase1 = std::any_of(sf.basic.begin(), sf.basic.end(), [&](int j) {
    return sf.kind[j] == ColumnKind::Artificial;
  });
  if (need_phase1) {
    std::vector<double> cost1(static_cast<std::size_t>(total), 0.0);
    for (int j = 0; j < total; ++j)
      if (sf.kind[j] == ColumnKind::Artificial) cost1[j] = 1.0;
    std::vector<char> all(static_cast<std::size_t>(total), 1);
    PhaseResult r1 = simplex.run(cost1, all);
    if (r1 == PhaseResult::IterationLimit)
      return finish(p, pre, extract(), SolveStatus::IterationLimit, simplex.iterations());

    simplex.refactor();
    double infeasibility = 0.0;
    double bmax = 0.0;
    for (double v : sf.b) bmax = std::max(bmax, v);
    const auto& xb = simplex.basic_values();
    for (std::size_t r = 0; r < sf.basic.size(); ++r)
      if (sf.kind[sf.basic[r]] == ColumnKind::Artificial) infeasibility += std::abs(xb[r]);
    if (infeasibility > opts.feasibility_tolerance * (1.0 + bmax)) {
      Solution sol;
      sol.status = SolveStatus::Infeasible;
      sol.iterations = simplex.iterations();
      sol.values.assign(static_cast<std::size_t>(n), 0.0);
      return sol;
    }
    simplex.lock_artificials();
  }

  std::vector<char> allowed(static_cast<std::size_t>(total), 1);
  for (int j = 0; j < total; ++j)
    if (sf.kind[j] == ColumnKind::Artificial) allowed[j] = 0;
  PhaseResult r2 = simplex.run(sf.cost, allowed);
  if (r2 == PhaseResult::Unbounded) {
    Solution sol;
    sol.status = SolveStatus::Unbounded;
    sol.iterations = simplex.iterations();
    sol.values.assign(static_cast<std::size_t>(n), 0.0);
    return sol;
  }
  simplex.refactor();
  return finish(p, pre, extract(),
                r2 == PhaseResult::Optimal ? SolveStatus::Optimal : SolveStatus::IterationLimit,
                simplex.iterations());
}

}  // namespace prepos::lp
