#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "prepos/instance.hpp"
#include "prepos/lp/problem.hpp"

namespace prepos {

enum class VarKind { X, Y, G, H };

/// Structured identity of one extensive-form column. Indices are 0-based
/// positions into the instance vectors; t is the 1-based remaining lifetime
/// period. Unused indices are -1 / 0.
///
///   X(c,i,s)      procurement
///   Y(c,i,j,t,s)  shipment from facility i to demand point j out of cohort t
///   G(c,j,s)      shortage
///   H(c,i,t,s)    inventory of cohort t after shipments
struct VariableKey {
  VarKind kind = VarKind::X;
  int c = -1;
  int i = -1;
  int j = -1;
  int t = 0;
  NodeId s;

  static VariableKey x(int c, int i, NodeId s) { return {VarKind::X, c, i, -1, 0, s}; }
  static VariableKey y(int c, int i, int j, int t, NodeId s) { return {VarKind::Y, c, i, j, t, s}; }
  static VariableKey g(int c, int j, NodeId s) { return {VarKind::G, c, -1, j, 0, s}; }
  static VariableKey h(int c, int i, int t, NodeId s) { return {VarKind::H, c, i, -1, t, s}; }

  /// Deterministic name used in MPS output, e.g. "H_c1_i1_t2_s5" (1-based).
  std::string name() const;

  friend bool operator==(const VariableKey&, const VariableKey&) = default;
};

struct VariableKeyHash {
  std::size_t operator()(const VariableKey& k) const noexcept;
};

/// Which constraint family a row instantiates.
enum class RowTag { RootStock, Procurement, Aging, Capacity, Shortage };
const char* to_string(RowTag tag);

/// The five objective term groups.
enum class CostTerm { Q = 0, O = 1, U = 2, V = 3, R = 4 };
inline constexpr std::size_t kNumCostTerms = 5;

struct CostBreakdown {
  double Q = 0;  ///< acquisition
  double O = 0;  ///< transport
  double U = 0;  ///< holding
  double V = 0;  ///< shortage penalty
  double R = 0;  ///< removal
  double total = 0;

  double economic() const { return Q + O + U + R; }
};

struct FormulationOptions {
  /// Also fix shipments out of the expired cohort (t = |T^c|) to zero.
  bool forbid_ship_at_expiry = false;
};

/// Extensive-form LP with a bidirectional map between VariableKeys and
/// column indices.
struct LinearProgram {
  lp::Problem problem;
  std::vector<VariableKey> keys;
  std::vector<RowTag> row_tags;
  /// Per-column objective coefficient split by cost term; sums to problem.cost.
  std::vector<std::array<double, kNumCostTerms>> term_cost;

  int num_columns() const { return problem.num_columns(); }
  int num_rows() const { return problem.num_rows(); }

  /// Throws std::out_of_range when the key has no column.
  int column(const VariableKey& key) const;
  bool has_column(const VariableKey& key) const { return index_.count(key) > 0; }

  int count(VarKind kind) const;
  int count(RowTag tag) const;
  int count_fixed() const;

  // builder internals
  int add_column(const VariableKey& key, const std::array<double, kNumCostTerms>& terms, bool fixed);

 private:
  std::unordered_map<VariableKey, int, VariableKeyHash> index_;
};

/// Materializes the pre-positioning LP. Throws std::invalid_argument carrying
/// the validation messages when the instance or its tree is invalid.
LinearProgram build_lp(const Instance& inst, const FormulationOptions& opts = {});

/// Probability-weighted Q, O, U, V, R at `values` (one entry per column).
/// Throws std::invalid_argument when the value vector is the wrong size.
CostBreakdown decompose_costs(const LinearProgram& lp, std::span<const double> values);

/// (commodity, facility, node) with the expired (t = |T^c|) inventory left
/// there, i.e. the quantities charged removal cost. Entries at or below
/// `threshold` are omitted.
using ExpiredKey = std::tuple<std::string, std::string, NodeId>;
std::map<ExpiredKey, double> expired_inventory(const Instance& inst, const LinearProgram& lp,
                                               std::span<const double> values, double threshold = 0.0);

}  // namespace prepos
