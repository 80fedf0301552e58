#include "basis.hpp"

#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <cmath>

namespace prepos::lp::detail {

struct BasisFactor::Lu {
  using Matrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
  Matrix basis;
  Eigen::SparseLU<Matrix, Eigen::COLAMDOrdering<int>> solver;
};

BasisFactor::BasisFactor() : lu_(std::make_unique<Lu>()) {}
BasisFactor::~BasisFactor() = default;
BasisFactor::BasisFactor(BasisFactor&&) noexcept = default;
BasisFactor& BasisFactor::operator=(BasisFactor&&) noexcept = default;

bool BasisFactor::factorize(const CscMatrix& a, std::span<const int> basic) {
  const int m = a.rows;
  std::vector<Eigen::Triplet<double, int>> trip;
  for (int k = 0; k < m; ++k) {
    int j = basic[k];
    for (int p = a.start[j]; p < a.start[j + 1]; ++p) trip.emplace_back(a.index[p], k, a.value[p]);
  }
  lu_->basis.resize(m, m);
  lu_->basis.setFromTriplets(trip.begin(), trip.end());
  lu_->basis.makeCompressed();
  lu_->solver.analyzePattern(lu_->basis);
  lu_->solver.factorize(lu_->basis);
  etas_.clear();
  return lu_->solver.info() == Eigen::Success;
}

void BasisFactor::ftran(std::vector<double>& v) const {
  if (v.empty()) return;
  Eigen::Map<Eigen::VectorXd> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::VectorXd sol = lu_->solver.solve(vec);
  vec = sol;
  for (const Eta& e : etas_) {
    double vr = v[e.row];
    if (vr == 0.0) continue;
    vr /= e.pivot;
    v[e.row] = vr;
    for (std::size_t k = 0; k < e.index.size(); ++k) v[e.index[k]] -= e.value[k] * vr;
  }
}

void BasisFactor::btran(std::vector<double>& v) const {
  if (v.empty()) return;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    const Eta& e = *it;
    double s = v[e.row];
    for (std::size_t k = 0; k < e.index.size(); ++k) s -= e.value[k] * v[e.index[k]];
    v[e.row] = s / e.pivot;
  }
  Eigen::Map<Eigen::VectorXd> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::VectorXd sol = lu_->solver.transpose().solve(vec);
  vec = sol;
}

void BasisFactor::push_eta(int row, const std::vector<double>& alpha) {
  Eta e{row, alpha[row], {}, {}};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (static_cast<int>(i) == row || std::abs(alpha[i]) < 1e-13) continue;
    e.index.push_back(static_cast<int>(i));
    e.value.push_back(alpha[i]);
  }
  etas_.push_back(std::move(e));
}

}  // namespace prepos::lp::detail
