#include "prepos/lp/mps.hpp"

#include <algorithm>
#include <vector>

#include "prepos/detail/numeric_text.hpp"
#include "prepos/lp/kernels.hpp"

namespace prepos::lp {

namespace {

std::string row_name(const Problem& p, int r) {
  const std::string& n = p.rows[r].name;
  return n.empty() ? "R" + std::to_string(r + 1) : n;
}

std::string column_name(const Problem& p, int j) {
  const std::string& n = p.column_names[j];
  return n.empty() ? "C" + std::to_string(j + 1) : n;
}

}  // namespace

std::string export_mps(const Problem& p) {
  using prepos::detail::shortest;
  std::string out = "NAME " + p.name + "\n";
  if (p.num_columns() == 0 && p.num_rows() == 0) return out + "ENDATA\n";

  out += "ROWS\n N OBJ\n";
  for (int r = 0; r < p.num_rows(); ++r)
    out += std::string(p.rows[r].sense == Sense::Equal ? " E " : " L ") + row_name(p, r) + "\n";

  out += "COLUMNS\n";
  CscMatrix a = to_csc(p);
  for (int j = 0; j < p.num_columns(); ++j) {
    const std::string name = column_name(p, j);
    // Every column is listed, even with a zero cost and no rows, so the
    // variable count survives the round trip.
    out += "    " + name + " OBJ " + shortest(p.cost[j]) + "\n";
    for (int k = a.start[j]; k < a.start[j + 1]; ++k)
      out += "    " + name + " " + row_name(p, a.index[k]) + " " + shortest(a.value[k]) + "\n";
  }

  out += "RHS\n";
  for (int r = 0; r < p.num_rows(); ++r)
    if (p.rows[r].rhs != 0.0) out += "    RHS " + row_name(p, r) + " " + shortest(p.rows[r].rhs) + "\n";

  out += "BOUNDS\n";
  for (int j = 0; j < p.num_columns(); ++j)
    if (p.fixed_zero[j]) out += " FX BND " + column_name(p, j) + " 0\n";
  out += "ENDATA\n";
  return out;
}

}  // namespace prepos::lp
