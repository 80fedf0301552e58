#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "prepos/formulation.hpp"
#include "prepos/instance.hpp"
#include "prepos/lp/simplex.hpp"

namespace prepos {

/// Malformed instance or solution text.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance as JSON with top-level keys commodities, facilities,
/// demand_points, distances and tree. Costs are decimal strings so that values
/// such as 161.925 round-trip exactly. Output is deterministic.
std::string instance_to_json(const Instance& inst);
/// Throws FormatError. The result is not validated; see validate_instance.
Instance instance_from_json(std::string_view text);

/// status, objective, breakdown, and the nonzero column values keyed by
/// column name.
std::string solution_to_json(const LinearProgram& lp, const lp::Solution& sol);

/// Writes through a sibling temporary file and a rename, so `path` holds
/// either its old content or all of `content`. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace prepos
