#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prepos/formulation.hpp"
#include "prepos/instance.hpp"
#include "prepos/lp/simplex.hpp"

namespace prepos {

enum class SweepParameter { Holding, Penalty, Removal };

std::string_view to_string(SweepParameter p);
/// Accepts "holding", "penalty", "removal". Throws std::invalid_argument.
SweepParameter parse_sweep_parameter(std::string_view name);

/// 100 (now - base) / base; nullopt when base is 0.
std::optional<double> percentage_change(double base, double now);

/// Percentage changes in Q, O, U, V, R, total (that order).
using CostDeltas = std::array<std::optional<double>, 6>;
CostDeltas cost_deltas(const CostBreakdown& base, const CostBreakdown& now);

struct SweepRow {
  double multiplier = 1;
  CostBreakdown breakdown;
  CostDeltas deltas;
};

struct SweepReport {
  SweepParameter parameter = SweepParameter::Holding;
  CostBreakdown baseline;
  std::vector<SweepRow> rows;  ///< ascending multiplier
};

/// Raised when a sweep point does not solve to optimality.
class SweepError : public std::runtime_error {
 public:
  SweepError(double multiplier, lp::SolveStatus status);
  double multiplier() const { return multiplier_; }
  lp::SolveStatus status() const { return status_; }

 private:
  double multiplier_;
  lp::SolveStatus status_;
};

/// Copy of `inst` with the chosen unit cost of every commodity multiplied.
Instance scale_parameter(const Instance& inst, SweepParameter p, double multiplier);

struct SweepOptions {
  lp::SolveOptions solve;
  /// Solve sweep points concurrently with OpenMP.
  bool parallel = true;
};

/// Baseline at multiplier 1 plus one cold solve per multiplier. Throws
/// std::invalid_argument for non-positive multipliers and SweepError for the
/// smallest multiplier whose solve is not optimal.
SweepReport run_sweep(const Instance& inst, SweepParameter p, std::span<const double> multipliers,
                      const SweepOptions& opts = {});

/// Header multiplier,Q,O,U,V,R,total,dQ,dO,dU,dV,dR,dTotal. The first data
/// row is the baseline; an undefined delta is an empty cell.
std::string write_report_csv(const SweepReport& report);
/// Inverse of write_report_csv. Throws std::invalid_argument on malformed text.
SweepReport read_report_csv(std::string_view text, SweepParameter p);

/// multiplier,economic_cost,total_penalty_cost for each row and the baseline,
/// ascending.
std::string write_figure_csv(const SweepReport& report);

}  // namespace prepos
