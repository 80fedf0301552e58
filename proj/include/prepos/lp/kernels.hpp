#pragma once

#include <span>
#include <vector>

#include "prepos/lp/problem.hpp"

namespace prepos::lp {

/// Compressed sparse column storage.
struct CscMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> start;  ///< size cols + 1
  std::vector<int> index;
  std::vector<double> value;

  int nnz() const { return static_cast<int>(index.size()); }
};

/// Compressed sparse row storage.
struct CsrMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> start;  ///< size rows + 1
  std::vector<int> index;
  std::vector<double> value;
};

CscMatrix to_csc(const Problem& p);
CsrMatrix to_csr(const Problem& p);

struct PricingResult {
  int column = -1;  ///< -1 when no column prices out
  double reduced_cost = 0;

  friend bool operator==(const PricingResult&, const PricingResult&) = default;
};

// Dantzig pricing: among columns with eligible[j] != 0, the one whose reduced
// cost c_j - y'A_j is most negative and below -tolerance. Ties go to the
// lowest index, so both variants return bit-identical results.
PricingResult price_dantzig_serial(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                                   std::span<const char> eligible, double tolerance);
PricingResult price_dantzig_parallel(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                                     std::span<const char> eligible, double tolerance);

/// Bland's rule: the lowest-index eligible column with reduced cost below
/// -tolerance.
PricingResult price_bland(const CscMatrix& a, std::span<const double> cost, std::span<const double> duals,
                          std::span<const char> eligible, double tolerance);

// out = A x, row by row.
void row_activity_serial(const CsrMatrix& a, std::span<const double> x, std::span<double> out);
void row_activity_parallel(const CsrMatrix& a, std::span<const double> x, std::span<double> out);

/// Largest violation of the rows of `p` (and of x >= 0, fixed columns) at x.
double max_violation(const Problem& p, std::span<const double> x, bool parallel = true);

}  // namespace prepos::lp
