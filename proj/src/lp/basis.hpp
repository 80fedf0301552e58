#pragma once

#include <memory>
#include <span>
#include <vector>

#include "prepos/lp/kernels.hpp"

namespace prepos::lp::detail {

// Basis inverse in product form: a sparse LU of the last refactorized basis
// B0 followed by one eta column per pivot since then.
class BasisFactor {
 public:
  BasisFactor();
  ~BasisFactor();
  BasisFactor(BasisFactor&&) noexcept;
  BasisFactor& operator=(BasisFactor&&) noexcept;

  /// Factorizes the columns of `a` listed in `basic` (one per row).
  /// Returns false if the basis is numerically singular.
  bool factorize(const CscMatrix& a, std::span<const int> basic);

  /// v := B^{-1} v
  void ftran(std::vector<double>& v) const;
  /// v := B^{-T} v
  void btran(std::vector<double>& v) const;

  /// Records the pivot that replaced basis position `row` by a column whose
  /// FTRAN image is `alpha`.
  void push_eta(int row, const std::vector<double>& alpha);
  int num_etas() const { return static_cast<int>(etas_.size()); }

 private:
  struct Eta {
    int row;
    double pivot;
    std::vector<int> index;
    std::vector<double> value;
  };
  struct Lu;
  std::unique_ptr<Lu> lu_;
  std::vector<Eta> etas_;
};

}  // namespace prepos::lp::detail
