#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "refinery/errors.hpp"
#include "refinery/types.hpp"

namespace refinery {

using Mask = std::uint64_t;

inline constexpr int kMaxSpecies = 8;
inline constexpr int kMaxModes = 64;

/// Mode bookkeeping for a multi-species register. Every species uses the same
/// number of modes M and the same site<->mode permutation; modes of one
/// species form a contiguous block, so Jordan-Wigner signs never cross
/// species boundaries.
struct ModeLayout {
  int species_count = 1;
  int modes_per_species = 0;
  // Permutation between physical site labels (row-major lattice order, or
  // orbital quantum number) and mode indices. Empty means identity. Lattice
  // layouts produced by refinement order the 2^d children of a coarse mode
  // contiguously, which is what makes prolongation sign-free.
  std::vector<int> site_to_mode;
  std::vector<int> mode_to_site;

  static ModeLayout identity(int species, int modes);
  static ModeLayout with_site_order(int species, std::vector<int> site_to_mode);

  int mode_of_site(int site) const {
    return site_to_mode.empty() ? site : site_to_mode[site];
  }
  int site_of_mode(int mode) const {
    return mode_to_site.empty() ? mode : mode_to_site[mode];
  }
  bool operator==(const ModeLayout&) const = default;
};

/// One occupation-number basis state: a bitmask per species.
struct Configuration {
  std::array<Mask, kMaxSpecies> occ{};
  int species = 0;

  bool operator==(const Configuration& o) const {
    if (species != o.species) return false;
    for (int k = 0; k < species; ++k)
      if (occ[k] != o.occ[k]) return false;
    return true;
  }
  int popcount(int k) const { return std::popcount(occ[k]); }
};

struct BilinearResult {
  Configuration config;
  int sign;  // +1 or -1
};

/// a^dag_{to} a_{from} within one species. Returns nullopt when the matrix
/// element vanishes (from unoccupied, or to occupied with to != from).
/// Sign is (-1)^(occupied modes strictly between from and to).
std::optional<BilinearResult> apply_bilinear(const Configuration& c, int species,
                                             int from, int to);

/// Applies one mode permutation to every species and tracks the fermionic
/// reordering sign.
struct PermutationResult {
  Configuration config;
  int sign;
};
PermutationResult apply_mode_permutation(const Configuration& c,
                                         const std::vector<int>& perm);

/// Enumerated fixed-particle-number basis with O(M) index lookup based on
/// per-species combinadic ranks. States are ordered lexicographically: the
/// per-species bitmasks ascend numerically, species 0 most significant.
class FockBasis {
 public:
  FockBasis() = default;

  static FockBasis enumerate(const ModeLayout& layout, std::vector<int> particles,
                             Index dimension_cap = kDefaultDimensionCap);

  const ModeLayout& layout() const { return layout_; }
  const std::vector<int>& particles() const { return particles_; }
  Index dimension() const { return static_cast<Index>(states_.size()); }
  const Configuration& state(Index i) const { return states_[static_cast<size_t>(i)]; }
  const std::vector<Configuration>& states() const { return states_; }

  Index index_of(const Configuration& c) const;

  static Index dimension_of(int modes, const std::vector<int>& particles);

 private:
  ModeLayout layout_;
  std::vector<int> particles_;
  std::vector<Configuration> states_;
  std::vector<Index> species_stride_;  // mixed-radix strides, species 0 most significant
};

/// Free-function spelling used throughout the build code.
inline FockBasis enumerate_basis(const ModeLayout& layout, std::vector<int> particles,
                                 Index dimension_cap = kDefaultDimensionCap) {
  return FockBasis::enumerate(layout, std::move(particles), dimension_cap);
}

Index binomial(int n, int k);

}  // namespace refinery
