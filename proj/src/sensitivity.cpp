#include "prepos/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "prepos/detail/numeric_text.hpp"

namespace prepos {

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Holding: return "holding";
    case SweepParameter::Penalty: return "penalty";
    case SweepParameter::Removal: return "removal";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p : {SweepParameter::Holding, SweepParameter::Penalty, SweepParameter::Removal})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

std::optional<double> percentage_change(double base, double now) {
  if (base == 0.0) return std::nullopt;
  return 100.0 * (now - base) / base;
}

CostDeltas cost_deltas(const CostBreakdown& base, const CostBreakdown& now) {
  return {percentage_change(base.Q, now.Q), percentage_change(base.O, now.O), percentage_change(base.U, now.U),
          percentage_change(base.V, now.V), percentage_change(base.R, now.R),
          percentage_change(base.total, now.total)};
}

SweepError::SweepError(double multiplier, lp::SolveStatus status)
    : std::runtime_error("sweep point at multiplier " + detail::shortest(multiplier) + " ended " +
                         std::string(lp::to_string(status))),
      multiplier_(multiplier),
      status_(status) {}

Instance scale_parameter(const Instance& inst, SweepParameter p, double multiplier) {
  Instance out = inst;
  for (auto& c : out.commodities) {
    switch (p) {
      case SweepParameter::Holding: c.holding_cost *= multiplier; break;
      case SweepParameter::Penalty: c.penalty_cost *= multiplier; break;
      case SweepParameter::Removal: c.removal_cost *= multiplier; break;
    }
  }
  return out;
}

SweepReport run_sweep(const Instance& inst, SweepParameter p, std::span<const double> multipliers,
                      const SweepOptions& opts) {
  for (double m : multipliers)
    if (!(m > 0) || !std::isfinite(m)) throw std::invalid_argument("multipliers must be positive");

  // Point 0 is the baseline.
  std::vector<double> points{1.0};
  std::vector<double> sorted(multipliers.begin(), multipliers.end());
  std::stable_sort(sorted.begin(), sorted.end());
  points.insert(points.end(), sorted.begin(), sorted.end());

  const int n = static_cast<int>(points.size());
  std::vector<CostBreakdown> results(points.size());
  std::vector<lp::SolveStatus> status(points.size(), lp::SolveStatus::Optimal);
  std::vector<std::exception_ptr> errors(points.size());

#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (int k = 0; k < n; ++k) {
    try {
      LinearProgram lp = build_lp(scale_parameter(inst, p, points[k]));
      lp::Solution sol = lp::solve(lp.problem, opts.solve);
      status[k] = sol.status;
      if (sol.optimal()) results[k] = decompose_costs(lp, sol.values);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (int k = 0; k < n; ++k)
    if (errors[k]) std::rethrow_exception(errors[k]);
  for (int k = 0; k < n; ++k)
    if (status[k] != lp::SolveStatus::Optimal) throw SweepError(points[k], status[k]);

  SweepReport report;
  report.parameter = p;
  report.baseline = results[0];
  for (int k = 1; k < n; ++k) report.rows.push_back({points[k], results[k], cost_deltas(results[0], results[k])});
  return report;
}

namespace {

constexpr std::string_view kReportHeader = "multiplier,Q,O,U,V,R,total,dQ,dO,dU,dV,dR,dTotal";

void append_row(std::string& out, double multiplier, const CostBreakdown& b, const CostDeltas& d) {
  using detail::shortest;
  out += shortest(multiplier);
  for (double v : {b.Q, b.O, b.U, b.V, b.R, b.total}) out += "," + shortest(v);
  for (const auto& delta : d) out += "," + (delta ? shortest(*delta) : std::string());
  out += "\n";
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::string write_report_csv(const SweepReport& report) {
  std::string out(kReportHeader);
  out += "\n";
  append_row(out, 1.0, report.baseline, cost_deltas(report.baseline, report.baseline));
  for (const auto& row : report.rows) append_row(out, row.multiplier, row.breakdown, row.deltas);
  return out;
}

SweepReport read_report_csv(std::string_view text, SweepParameter p) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  if (lines.empty() || lines[0] != kReportHeader) throw std::invalid_argument("report CSV header mismatch");
  if (lines.size() < 2) throw std::invalid_argument("report CSV has no baseline row");

  SweepReport report;
  report.parameter = p;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::vector<std::string> cells = split(lines[k]);
    if (cells.size() != 13)
      throw std::invalid_argument("report CSV row " + std::to_string(k) + " has " + std::to_string(cells.size()) +
                                  " cells");
    SweepRow row;
    row.multiplier = detail::parse_double(cells[0]);
    double* fields[] = {&row.breakdown.Q, &row.breakdown.O, &row.breakdown.U,
                        &row.breakdown.V, &row.breakdown.R, &row.breakdown.total};
    for (int f = 0; f < 6; ++f) *fields[f] = detail::parse_double(cells[1 + f]);
    for (int f = 0; f < 6; ++f)
      if (!cells[7 + f].empty()) row.deltas[f] = detail::parse_double(cells[7 + f]);
    if (k == 1)
      report.baseline = row.breakdown;
    else
      report.rows.push_back(std::move(row));
  }
  return report;
}

std::string write_figure_csv(const SweepReport& report) {
  using detail::shortest;
  std::string out = "multiplier,economic_cost,total_penalty_cost\n";
  auto emit = [&](double m, const CostBreakdown& b) {
    out += shortest(m) + "," + shortest(b.economic()) + "," + shortest(b.V) + "\n";
  };
  // The baseline is plotted at 1 unless the sweep itself covers 1.
  bool baseline_done = std::any_of(report.rows.begin(), report.rows.end(), [](const SweepRow& r) { return r.multiplier == 1.0; });
  for (const auto& row : report.rows) {
    if (!baseline_done && row.multiplier > 1.0) {
      emit(1.0, report.baseline);
      baseline_done = true;
    }
    emit(row.multiplier, row.breakdown);
  }
  if (!baseline_done) emit(1.0, report.baseline);
  return out;
}

}  // namespace prepos
