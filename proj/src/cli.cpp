#include "prepos/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <ostream>

#include "prepos/casestudy.hpp"
#include "prepos/formulation.hpp"
#include "prepos/instance_json.hpp"
#include "prepos/lp/mps.hpp"
#include "prepos/lp/simplex.hpp"
#include "prepos/sensitivity.hpp"

#ifndef PREPOS_DEFAULT_STATES
#define PREPOS_DEFAULT_STATES "data/states.csv"
#endif

namespace prepos {

namespace {

struct Failure {
  ExitCode code;
  std::string message;
};

Instance load_instance(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw Failure{ExitCode::Io, e.what()};
  }
  try {
    return instance_from_json(text);
  } catch (const FormatError& e) {
    throw Failure{ExitCode::Validation, path + ": " + e.what()};
  }
}

void require_valid(const Instance& inst, std::ostream& err) {
  auto problems = validate_instance(inst);
  if (problems.empty()) return;
  for (const auto& p : problems) err << "invalid: " << p << "\n";
  throw Failure{ExitCode::Validation, std::to_string(problems.size()) + " validation problem(s)"};
}

void write_output(const std::string& path, std::string_view content) {
  try {
    write_file_atomic(path, content);
  } catch (const std::runtime_error& e) {
    throw Failure{ExitCode::Io, e.what()};
  }
}

std::filesystem::path default_states() {
  std::filesystem::path local = "data/states.csv";
  return std::filesystem::exists(local) ? local : std::filesystem::path(PREPOS_DEFAULT_STATES);
}

}  // namespace

ExitCode run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relief-supply pre-positioning: generate, solve and sweep multi-stage stochastic LPs", "prepos"};
  app.require_subcommand(1);

  // generate
  CaseStudyConfig gen;
  std::string gen_out;
  std::string states_file;
  std::vector<int> stage_branching;
  auto* generate = app.add_subcommand("generate", "Write a seeded mainland-US case-study instance");
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--out", gen_out, "Instance JSON path")->required();
  generate->add_option("--states", states_file, "state,city,lat,lon CSV");
  generate->add_option("--stages", gen.stages, "Number of stages")->capture_default_str();
  generate->add_option("--branching", gen.branching, "Children per node")->capture_default_str();
  generate->add_option("--stage-branching", stage_branching, "Children per node for each stage after the root")
      ->delimiter(',');
  generate->add_option("--stacking-height", gen.stacking_height, "Stacking height in ft")->capture_default_str();
  generate->add_option("--occurrence", gen.occurrence_probability,
                       "Chance a disaster type strikes at a node (1 = always)")
      ->capture_default_str();

  // solve
  std::string solve_in, solve_out, solve_mps;
  double tol = lp::SolveOptions{}.feasibility_tolerance;
  std::int64_t max_iterations = lp::SolveOptions{}.max_iterations;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", solve_in, "Instance JSON")->required();
  solve->add_option("--out", solve_out, "Solution JSON path (default: stdout)");
  solve->add_option("--mps", solve_mps, "Also export the LP as free MPS");
  solve->add_option("--tol", tol, "Feasibility and optimality tolerance")->capture_default_str();
  solve->add_option("--max-iterations", max_iterations, "Simplex iteration limit")->capture_default_str();

  // sweep
  std::string sweep_in, param_name, csv_path, figure_path;
  std::vector<double> multipliers;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "Re-solve under scaled holding, penalty or removal cost");
  sweep->add_option("instance", sweep_in, "Instance JSON")->required();
  sweep->add_option("--param", param_name, "holding, penalty or removal")
      ->required()
      ->check(CLI::IsMember({"holding", "penalty", "removal"}));
  sweep->add_option("--multipliers", multipliers, "Comma-separated multipliers")->required()->delimiter(',');
  sweep->add_option("--csv", csv_path, "Report CSV path (default: stdout)");
  sweep->add_option("--figure-csv", figure_path, "Economic vs penalty cost CSV path");
  sweep->add_option("--tol", tol, "Feasibility and optimality tolerance")->capture_default_str();
  sweep->add_option("--max-iterations", max_iterations, "Simplex iteration limit per point")->capture_default_str();
  sweep->add_flag("--serial", serial, "Solve sweep points one after another");

  // validate
  std::string validate_in;
  auto* validate = app.add_subcommand("validate", "Check an instance and its scenario tree");
  validate->add_option("instance", validate_in, "Instance JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return ExitCode::Validation;
  }

  try {
    lp::SolveOptions solve_opts;
    if (!(tol > 0)) throw Failure{ExitCode::Validation, "--tol must be positive"};
    if (max_iterations <= 0) throw Failure{ExitCode::Validation, "--max-iterations must be positive"};
    solve_opts.feasibility_tolerance = solve_opts.optimality_tolerance = tol;
    solve_opts.max_iterations = max_iterations;

    if (generate->parsed()) {
      gen.states_file = states_file.empty() ? default_states() : std::filesystem::path(states_file);
      gen.stage_branching = stage_branching;
      try {
        validate_config(gen);
      } catch (const std::invalid_argument& e) {
        throw Failure{ExitCode::Validation, e.what()};
      }
      Instance inst;
      try {
        inst = build_case_study(gen);
      } catch (const std::runtime_error& e) {
        throw Failure{ExitCode::Io, e.what()};
      }
      write_output(gen_out, instance_to_json(inst));
      out << "wrote " << gen_out << " (" << inst.tree.size() << " nodes, " << inst.demand_points.size()
          << " demand points)\n";
    } else if (solve->parsed()) {
      Instance inst = load_instance(solve_in);
      require_valid(inst, err);
      LinearProgram lp = build_lp(inst);
      if (!solve_mps.empty()) write_output(solve_mps, lp::export_mps(lp.problem));
      lp::Solution sol = lp::solve(lp.problem, solve_opts);
      std::string json = solution_to_json(lp, sol);
      if (solve_out.empty())
        out << json;
      else
        write_output(solve_out, json);
      if (!sol.optimal()) throw Failure{ExitCode::Solve, "solve ended " + std::string(lp::to_string(sol.status))};
    } else if (sweep->parsed()) {
      Instance inst = load_instance(sweep_in);
      require_valid(inst, err);
      if (std::any_of(multipliers.begin(), multipliers.end(), [](double m) { return !(m > 0); }))
        throw Failure{ExitCode::Validation, "multipliers must be positive"};
      SweepOptions opts{solve_opts, !serial};
      SweepReport report;
      try {
        report = run_sweep(inst, parse_sweep_parameter(param_name), multipliers, opts);
      } catch (const SweepError& e) {
        throw Failure{ExitCode::Solve, e.what()};
      }
      std::string csv = write_report_csv(report);
      if (csv_path.empty())
        out << csv;
      else
        write_output(csv_path, csv);
      if (!figure_path.empty()) write_output(figure_path, write_figure_csv(report));
    } else if (validate->parsed()) {
      Instance inst = load_instance(validate_in);
      auto problems = validate_instance(inst);
      for (const auto& w : validate_tree(inst.tree).warnings) out << "warning: " << w << "\n";
      for (const auto& p : problems) out << "invalid: " << p << "\n";
      if (!problems.empty()) return ExitCode::Validation;
      out << "ok: " << inst.commodities.size() << " commodities, " << inst.facilities.size() << " facilities, "
          << inst.demand_points.size() << " demand points, " << inst.tree.size() << " nodes\n";
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  }
  return ExitCode::Ok;
}

}  // namespace prepos
