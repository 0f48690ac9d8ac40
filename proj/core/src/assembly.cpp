#include "refinery/assembly.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace refinery {

double TwoBodyTensor::hermiticity_defect() const {
  double defect = 0.0;
  for (int p = 0; p < modes; ++p)
    for (int q = 0; q < modes; ++q)
      for (int r = 0; r < modes; ++r)
        for (int s = 0; s < modes; ++s)
          defect = std::max(defect, std::abs(at(p, q, r, s) - at(r, s, p, q)));
  return defect;
}

SparseOperator build_one_body(const FockBasis& basis,
                              const std::vector<RealMatrix>& h_per_species) {
  const ModeLayout& layout = basis.layout();
  const int K = layout.species_count;
  const int M = layout.modes_per_species;
  if (static_cast<int>(h_per_species.size()) != K)
    throw DimensionError("one-body: need one matrix per species");
  for (const auto& h : h_per_species)
    if (h.rows() != M || h.cols() != M)
      throw DimensionError("one-body: matrix is not M x M");

  // Nonzero entries per species, grouped by source mode j.
  struct Entry {
    int to;
    double value;
  };
  std::vector<std::vector<std::vector<Entry>>> entries(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    entries[static_cast<size_t>(k)].resize(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j)
      for (int i = 0; i < M; ++i)
        if (h_per_species[static_cast<size_t>(k)](i, j) != 0.0)
          entries[static_cast<size_t>(k)][static_cast<size_t>(j)].push_back(
              {i, h_per_species[static_cast<size_t>(k)](i, j)});
  }

  std::vector<Triplet> trip;
  const Index dim = basis.dimension();
  for (Index idx = 0; idx < dim; ++idx) {
    const Configuration& c = basis.state(idx);
    for (int k = 0; k < K; ++k) {
      Mask m = c.occ[k];
      while (m) {
        const int j = std::countr_zero(m);
        m &= m - 1;
        for (const Entry& e : entries[static_cast<size_t>(k)][static_cast<size_t>(j)]) {
          const auto res = apply_bilinear(c, k, j, e.to);
          if (!res) continue;
          trip.push_back({basis.index_of(res->config), idx, e.value * res->sign});
        }
      }
    }
  }
  return SparseOperator::from_triplets(dim, std::move(trip), true, 0.0);
}

SparseOperator build_one_body(const FockBasis& basis, const RealMatrix& h_shared) {
  return build_one_body(
      basis, std::vector<RealMatrix>(
                 static_cast<size_t>(basis.layout().species_count), h_shared));
}

SparseOperator build_density_density(const FockBasis& basis,
                                     const std::vector<DensityCoupling>& couplings) {
  const ModeLayout& layout = basis.layout();
  const int M = layout.modes_per_species;
  for (const auto& c : couplings) {
    if (c.species_j >= c.species_k)
      throw DimensionError("density coupling requires species_j < species_k");
    if (c.species_k >= layout.species_count)
      throw DimensionError("density coupling species out of range");
    if (!c.per_site.empty() && static_cast<int>(c.per_site.size()) != M)
      throw DimensionError("per-site coupling length mismatch");
  }

  std::vector<Triplet> trip;
  const Index dim = basis.dimension();
  trip.reserve(static_cast<size_t>(dim));
  for (Index idx = 0; idx < dim; ++idx) {
    const Configuration& c = basis.state(idx);
    double diag = 0.0;
    for (const auto& cpl : couplings) {
      Mask both = c.occ[cpl.species_j] & c.occ[cpl.species_k];
      if (cpl.per_site.empty()) {
        diag += cpl.value * std::popcount(both);
      } else {
        while (both) {
          const int mode = std::countr_zero(both);
          both &= both - 1;
          diag += cpl.per_site[static_cast<size_t>(layout.site_of_mode(mode))];
        }
      }
    }
    if (diag != 0.0) trip.push_back({idx, idx, diag});
  }
  return SparseOperator::from_triplets(dim, std::move(trip), true, 0.0);
}

SparseOperator build_two_body_tensor(const FockBasis& basis, const TwoBodyTensor& V) {
  const ModeLayout& layout = basis.layout();
  const int K = layout.species_count;
  const int M = layout.modes_per_species;
  if (V.modes != M) throw DimensionError("two-body tensor mode count mismatch");
  const double defect = V.hermiticity_defect();
  if (defect > 1e-10)
    throw NumericalError("two-body tensor hermiticity defect " + std::to_string(defect));

  const double scale = [&] {
    double s = 0.0;
    for (double x : V.v) s = std::max(s, std::abs(x));
    return s;
  }();
  const double drop = scale * 1e-16;

  std::vector<Triplet> trip;
  const Index dim = basis.dimension();
  for (Index idx = 0; idx < dim; ++idx) {
    const Configuration& c = basis.state(idx);
    for (int j = 0; j < K; ++j) {
      for (int k = j + 1; k < K; ++k) {
        Mask mj = c.occ[j];
        while (mj) {
          const int r = std::countr_zero(mj);
          mj &= mj - 1;
          Mask mk = c.occ[k];
          while (mk) {
            const int s = std::countr_zero(mk);
            mk &= mk - 1;
            for (int p = 0; p < M; ++p) {
              const auto res_j = apply_bilinear(c, j, r, p);
              if (!res_j) continue;
              for (int q = 0; q < M; ++q) {
                const double v = V.at(p, q, r, s);
                if (std::abs(v) <= drop) continue;
                const auto res_k = apply_bilinear(res_j->config, k, s, q);
                if (!res_k) continue;
                trip.push_back({basis.index_of(res_k->config), idx,
                                v * res_j->sign * res_k->sign});
              }
            }
          }
        }
      }
    }
  }
  return SparseOperator::from_triplets(dim, std::move(trip), true, 0.0);
}

}  // namespace refinery
