#pragma once

#include <vector>

#include "refinery/fock.hpp"
#include "refinery/sparse.hpp"

namespace refinery {

/// Four-index interaction coefficients V[p,q,r,s], one shared tensor applied
/// to every ordered species pair j < k as
///   sum_{j<k} sum_{pqrs} V[p,q,r,s] a^dag_{p,j} a^dag_{q,k} a_{s,k} a_{r,j}.
struct TwoBodyTensor {
  int modes = 0;
  std::vector<double> v;  // flat, index ((p*M + q)*M + r)*M + s

  explicit TwoBodyTensor(int m = 0)
      : modes(m), v(static_cast<size_t>(m) * m * m * m, 0.0) {}
  double& at(int p, int q, int r, int s) {
    return v[static_cast<size_t>(((p * modes + q) * modes + r)) * modes + s];
  }
  double at(int p, int q, int r, int s) const {
    return v[static_cast<size_t>(((p * modes + q) * modes + r)) * modes + s];
  }
  double hermiticity_defect() const;
};

/// Density-density coupling between species j < k. When per_site is empty the
/// uniform value applies to every lattice site; otherwise per_site[site]
/// multiplies n_{site,j} n_{site,k}.
struct DensityCoupling {
  int species_j = 0;
  int species_k = 1;
  double value = 0.0;
  std::vector<double> per_site;
};

/// sum_{k,i,j} h_k[i,j] a^dag_{i,k} a_{j,k}; h is indexed by mode.
SparseOperator build_one_body(const FockBasis& basis,
                              const std::vector<RealMatrix>& h_per_species);
SparseOperator build_one_body(const FockBasis& basis, const RealMatrix& h_shared);

SparseOperator build_density_density(const FockBasis& basis,
                                     const std::vector<DensityCoupling>& couplings);

SparseOperator build_two_body_tensor(const FockBasis& basis, const TwoBodyTensor& V);

}  // namespace refinery
