#pragma once

#include <vector>

#include "prepos/lp/problem.hpp"

namespace prepos::lp::detail {

// Reductions applied before the simplex:
//   * columns flagged fixed_zero are removed
//   * empty rows are checked and dropped
//   * singleton equality rows fix their column
//   * zero-rhs rows whose coefficients share one sign force every column to 0
//   * columns left in no row are fixed at 0 (or flag unboundedness)
struct PresolveResult {
  enum class Outcome { Reduced, Infeasible, Unbounded } outcome = Outcome::Reduced;

  Problem reduced;
  std::vector<int> kept_columns;  ///< reduced column -> original column
  std::vector<int> kept_rows;     ///< reduced row -> original row
  std::vector<double> fixed_value;  ///< per original column; used where not kept
  double objective_offset = 0;

  std::vector<double> postsolve(const std::vector<double>& reduced_values) const;
};

PresolveResult presolve(const Problem& p, double tolerance);

}  // namespace prepos::lp::detail
