#pragma once

#include <string>
#include <utility>
#include <vector>

namespace prepos::lp {

enum class Sense { Equal, LessEqual };

struct Entry {
  int column = 0;
  double value = 0;
};

struct Row {
  std::vector<Entry> entries;
  Sense sense = Sense::Equal;
  double rhs = 0;
  std::string name;
};

/// min cost'x  s.t. rows, x >= 0, and x_j = 0 wherever fixed_zero[j].
struct Problem {
  std::string name = "PREPOS";
  std::vector<std::string> column_names;
  std::vector<double> cost;
  std::vector<char> fixed_zero;
  std::vector<Row> rows;

  int num_columns() const { return static_cast<int>(cost.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  /// Appends a column and returns its index.
  int add_column(std::string column_name, double objective, bool fixed = false) {
    column_names.push_back(std::move(column_name));
    cost.push_back(objective);
    fixed_zero.push_back(fixed ? 1 : 0);
    return num_columns() - 1;
  }
};

}  // namespace prepos::lp
