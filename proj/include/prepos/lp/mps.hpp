#pragma once

#include <string>

#include "prepos/lp/problem.hpp"

namespace prepos::lp {

/// Free-format MPS. Rows named OBJ (objective) and by Row::name, columns by
/// Problem::column_names; fixed columns get an FX 0 bound. An empty problem
/// yields just NAME and ENDATA.
std::string export_mps(const Problem& p);

}  // namespace prepos::lp
