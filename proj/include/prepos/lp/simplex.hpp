#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "prepos/lp/problem.hpp"

namespace prepos::lp {

struct SolveOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-7;
  std::int64_t max_iterations = 10'000'000;
  int refactor_interval = 64;
  /// Non-improving pivots tolerated before switching to Bland's rule.
  int stall_threshold = 1000;
  /// Use the OpenMP pricing kernel. Off by default: a solve is single-threaded
  /// and parallelism comes from running independent solves side by side.
  bool parallel_pricing = false;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::IterationLimit;
  double objective = 0;
  std::vector<double> values;  ///< one per column of the input problem
  std::int64_t iterations = 0;
  double max_residual = 0;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Two-phase revised primal simplex. Deterministic: Dantzig pricing, Bland's
/// rule while stalled, ratio-test ties to the lowest column index.
/// Throws std::invalid_argument if the options are not positive.
Solution solve(const Problem& p, const SolveOptions& opts = {});

}  // namespace prepos::lp
