#include "refinery/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace refinery {

SparseOperator SparseOperator::from_triplets(Index dim, std::vector<Triplet> triplets,
                                             bool hermitian, double drop_tol) {
  SparseOperator op;
  op.dim_ = dim;
  op.hermitian_ = hermitian;

  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  op.row_ptr_.assign(static_cast<size_t>(dim) + 1, 0);
  op.cols_.reserve(triplets.size());
  op.values_.reserve(triplets.size());

  size_t i = 0;
  for (Index r = 0; r < dim; ++r) {
    op.row_ptr_[static_cast<size_t>(r)] = static_cast<Index>(op.values_.size());
    while (i < triplets.size() && triplets[i].row == r) {
      const Index c = triplets[i].col;
      double v = 0.0;
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
        v += triplets[i++].value;
      if (std::abs(v) > drop_tol) {
        op.cols_.push_back(static_cast<std::int32_t>(c));
        op.values_.push_back(v);
      }
    }
  }
  op.row_ptr_[static_cast<size_t>(dim)] = static_cast<Index>(op.values_.size());
  return op;
}

SparseOperator SparseOperator::identity(Index dim, double scale) {
  std::vector<Triplet> t;
  t.reserve(static_cast<size_t>(dim));
  for (Index i = 0; i < dim; ++i) t.push_back({i, i, scale});
  return from_triplets(dim, std::move(t), true);
}

void SparseOperator::apply(const RealVector& x, RealVector& y) const {
  if (x.size() != dim_) throw DimensionError("sparse matvec dimension mismatch");
  y.resize(dim_);
  const double* xv = x.data();
  for (Index r = 0; r < dim_; ++r) {
    double acc = 0.0;
    const Index end = row_ptr_[static_cast<size_t>(r) + 1];
    for (Index e = row_ptr_[static_cast<size_t>(r)]; e < end; ++e)
      acc += values_[static_cast<size_t>(e)] *
             xv[cols_[static_cast<size_t>(e)]];
    y[r] = acc;
  }
}

void SparseOperator::apply(const ComplexVector& x, ComplexVector& y) const {
  if (x.size() != dim_) throw DimensionError("sparse matvec dimension mismatch");
  y.resize(dim_);
  const Complex* xv = x.data();
  for (Index r = 0; r < dim_; ++r) {
    double re = 0.0, im = 0.0;
    const Index end = row_ptr_[static_cast<size_t>(r) + 1];
    for (Index e = row_ptr_[static_cast<size_t>(r)]; e < end; ++e) {
      const double v = values_[static_cast<size_t>(e)];
      const Complex& c = xv[cols_[static_cast<size_t>(e)]];
      re += v * c.real();
      im += v * c.imag();
    }
    y[r] = Complex(re, im);
  }
}

double SparseOperator::norm_bound() const {
  // Infinity norm; equals a Gershgorin-type bound on the spectral radius.
  double best = 0.0;
  for (Index r = 0; r < dim_; ++r) {
    double row = 0.0;
    for (Index e = row_ptr_[static_cast<size_t>(r)];
         e < row_ptr_[static_cast<size_t>(r) + 1]; ++e)
      row += std::abs(values_[static_cast<size_t>(e)]);
    best = std::max(best, row);
  }
  return best;
}

double SparseOperator::coeff(Index row, Index col) const {
  for (Index e = row_ptr_[static_cast<size_t>(row)];
       e < row_ptr_[static_cast<size_t>(row) + 1]; ++e)
    if (cols_[static_cast<size_t>(e)] == col) return values_[static_cast<size_t>(e)];
  return 0.0;
}

double SparseOperator::hermiticity_defect() const {
  double defect = 0.0;
  for_each([&](Index r, Index c, double v) {
    if (c >= r) defect = std::max(defect, std::abs(v - coeff(c, r)));
  });
  return defect;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

SparseOperator SparseOperator::shifted(double mu) const {
  std::vector<Triplet> t;
  t.reserve(values_.size() + static_cast<size_t>(dim_));
  for_each([&](Index r, Index c, double v) { t.push_back({r, c, v}); });
  for (Index i = 0; i < dim_; ++i) t.push_back({i, i, -mu});
  return from_triplets(dim_, std::move(t), hermitian_);
}

SparseOperator SparseOperator::weighted_sum(double alpha, const SparseOperator& a,
                                            double beta, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("weighted_sum dimension mismatch");
  std::vector<Triplet> t;
  t.reserve(a.values_.size() + b.values_.size());
  a.for_each([&](Index r, Index c, double v) { t.push_back({r, c, alpha * v}); });
  b.for_each([&](Index r, Index c, double v) { t.push_back({r, c, beta * v}); });
  return from_triplets(a.dim(), std::move(t), a.hermitian_ && b.hermitian_);
}

RealMatrix SparseOperator::to_dense() const {
  RealMatrix m = RealMatrix::Zero(dim_, dim_);
  for_each([&](Index r, Index c, double v) { m(r, c) += v; });
  return m;
}

DenseMap::DenseMap(RealMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("DenseMap requires a square matrix");
}

void DenseMap::apply(const ComplexVector& x, ComplexVector& y) const {
  y = m_ * x.real() + Complex(0, 1) * (m_ * x.imag());
}

double DenseMap::norm_bound() const {
  return m_.cwiseAbs().rowwise().sum().maxCoeff();
}

RealMatrix materialize(const LinearMap& op) {
  const Index n = op.dim();
  RealMatrix out(n, n);
  RealVector e = RealVector::Zero(n), col(n);
  for (Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    op.apply(e, col);
    out.col(j) = col;
    e[j] = 0.0;
  }
  return out;
}

}  // namespace refinery
