#pragma once

#include <cstdint>
#include <vector>

#include "refinery/errors.hpp"
#include "refinery/types.hpp"

namespace refinery {

/// Applicable Hermitian operator. Every operator in this library is real
/// symmetric, so there is a real fast path next to the complex one used by
/// time evolution.
class LinearMap {
 public:
  virtual ~LinearMap() = default;
  virtual Index dim() const = 0;
  virtual void apply(const RealVector& x, RealVector& y) const = 0;
  virtual void apply(const ComplexVector& x, ComplexVector& y) const = 0;
  /// Cheap upper bound on the spectral radius (used for tolerance scales).
  virtual double norm_bound() const = 0;

  RealVector operator()(const RealVector& x) const {
    RealVector y(dim());
    apply(x, y);
    return y;
  }
  ComplexVector operator()(const ComplexVector& x) const {
    ComplexVector y(dim());
    apply(x, y);
    return y;
  }
};

struct Triplet {
  Index row;
  Index col;
  double value;
};

/// Compressed sparse row, real symmetric storage. Assembled from triplets
/// (duplicates are summed, near-zero results dropped).
class SparseOperator : public LinearMap {
 public:
  SparseOperator() = default;

  static SparseOperator from_triplets(Index dim, std::vector<Triplet> triplets,
                                      bool hermitian, double drop_tol = 0.0);
  static SparseOperator identity(Index dim, double scale = 1.0);

  Index dim() const override { return dim_; }
  void apply(const RealVector& x, RealVector& y) const override;
  void apply(const ComplexVector& x, ComplexVector& y) const override;
  double norm_bound() const override;

  Index nnz() const { return static_cast<Index>(values_.size()); }
  bool hermitian_flag() const { return hermitian_; }

  /// max_|ij| |A_ij - A_ji| ; the hermiticity invariant compares this against
  /// 1e-12 * max|A|.
  double hermiticity_defect() const;
  double max_abs() const;

  /// H - mu * I (diagonal shift).
  SparseOperator shifted(double mu) const;
  /// alpha * A + beta * B on matching dimensions.
  static SparseOperator weighted_sum(double alpha, const SparseOperator& a,
                                     double beta, const SparseOperator& b);

  RealMatrix to_dense() const;

  double coeff(Index row, Index col) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (Index r = 0; r < dim_; ++r)
      for (Index e = row_ptr_[static_cast<size_t>(r)];
           e < row_ptr_[static_cast<size_t>(r) + 1]; ++e)
        fn(r, static_cast<Index>(cols_[static_cast<size_t>(e)]),
           values_[static_cast<size_t>(e)]);
  }

 private:
  Index dim_ = 0;
  bool hermitian_ = false;
  std::vector<Index> row_ptr_;
  std::vector<std::int32_t> cols_;
  std::vector<double> values_;
};

/// View of an Eigen dense/sparse-free real symmetric matrix stored as a flat
/// dense array; used for small single-particle operators.
class DenseMap : public LinearMap {
 public:
  explicit DenseMap(RealMatrix m);
  Index dim() const override { return m_.rows(); }
  void apply(const RealVector& x, RealVector& y) const override { y = m_ * x; }
  void apply(const ComplexVector& x, ComplexVector& y) const override;
  double norm_bound() const override;
  const RealMatrix& matrix() const { return m_; }

 private:
  RealMatrix m_;
};

/// Materializes any LinearMap column by column; only sensible for small dims.
RealMatrix materialize(const LinearMap& op);

}  // namespace refinery
