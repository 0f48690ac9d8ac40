#include "refinery/fock.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace refinery {

namespace {

// Binomial table sized for kMaxModes; values fit in int64 for M <= 64 and the
// particle counts this library ever enumerates (dimension cap guards growth).
struct BinomialTable {
  std::array<std::array<Index, kMaxModes + 1>, kMaxModes + 1> c{};
  BinomialTable() {
    for (int n = 0; n <= kMaxModes; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};
const BinomialTable g_binomial;

// Colexicographic rank of a mask among all masks with the same popcount,
// which equals its position in ascending numeric order.
Index colex_rank(Mask mask) {
  Index rank = 0;
  int i = 1;
  while (mask) {
    const int pos = std::countr_zero(mask);
    rank += g_binomial.c[pos][i];
    ++i;
    mask &= mask - 1;
  }
  return rank;
}

// Gosper's hack: next mask with the same popcount in ascending order.
Mask next_same_popcount(Mask v) {
  const Mask c = v & (~v + 1);
  const Mask r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

Index binomial(int n, int k) {
  if (k < 0 || k > n || n < 0 || n > kMaxModes) return 0;
  return g_binomial.c[n][k];
}

ModeLayout ModeLayout::identity(int species, int modes) {
  ModeLayout layout;
  layout.species_count = species;
  layout.modes_per_species = modes;
  return layout;
}

ModeLayout ModeLayout::with_site_order(int species, std::vector<int> site_to_mode) {
  ModeLayout layout;
  layout.species_count = species;
  layout.modes_per_species = static_cast<int>(site_to_mode.size());
  layout.mode_to_site.assign(site_to_mode.size(), -1);
  for (size_t site = 0; site < site_to_mode.size(); ++site) {
    const int mode = site_to_mode[site];
    if (mode < 0 || mode >= layout.modes_per_species ||
        layout.mode_to_site[mode] != -1)
      throw DimensionError("mode ordering is not a bijection");
    layout.mode_to_site[mode] = static_cast<int>(site);
  }
  layout.site_to_mode = std::move(site_to_mode);
  return layout;
}

std::optional<BilinearResult> apply_bilinear(const Configuration& c, int species,
                                             int from, int to) {
  const Mask occ = c.occ[species];
  const Mask from_bit = Mask{1} << from;
  if (!(occ & from_bit)) return std::nullopt;
  if (from == to) return BilinearResult{c, +1};
  const Mask to_bit = Mask{1} << to;
  if (occ & to_bit) return std::nullopt;

  const int lo = std::min(from, to);
  const int hi = std::max(from, to);
  // Occupied modes strictly between the endpoints.
  const Mask between = (hi - lo > 1)
                           ? occ & ((Mask{1} << hi) - 1) & ~((Mask{1} << (lo + 1)) - 1)
                           : Mask{0};
  BilinearResult out;
  out.config = c;
  out.config.occ[species] = (occ & ~from_bit) | to_bit;
  out.sign = (std::popcount(between) % 2 == 0) ? +1 : -1;
  return out;
}

PermutationResult apply_mode_permutation(const Configuration& c,
                                         const std::vector<int>& perm) {
  PermutationResult out;
  out.config = c;
  out.sign = +1;
  std::array<int, kMaxModes> mapped{};
  for (int k = 0; k < c.species; ++k) {
    Mask m = c.occ[k];
    int n = 0;
    while (m) {
      mapped[n++] = perm[std::countr_zero(m)];
      m &= m - 1;
    }
    // Parity of the permutation that sorts the mapped occupied modes.
    int inversions = 0;
    Mask result = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        if (mapped[i] > mapped[j]) ++inversions;
      result |= Mask{1} << mapped[i];
    }
    out.config.occ[k] = result;
    if (inversions % 2 == 1) out.sign = -out.sign;
  }
  return out;
}

Index FockBasis::dimension_of(int modes, const std::vector<int>& particles) {
  Index dim = 1;
  for (int n : particles) {
    const Index b = binomial(modes, n);
    if (b == 0) return 0;
    if (dim > (Index{1} << 62) / b) return Index{1} << 62;  // saturate
    dim *= b;
  }
  return dim;
}

FockBasis FockBasis::enumerate(const ModeLayout& layout, std::vector<int> particles,
                               Index dimension_cap) {
  const int modes = layout.modes_per_species;
  const int species = layout.species_count;
  if (static_cast<int>(particles.size()) != species)
    throw DimensionError("particle count list does not match species count");
  if (species > kMaxSpecies)
    throw CapacityError("species count exceeds compiled kMaxSpecies = " +
                        std::to_string(kMaxSpecies));
  if (modes > kMaxModes) throw CapacityError("modes per species exceeds 64");
  for (int n : particles)
    if (n < 0 || n > modes) throw DimensionError("particle number outside [0, M]");

  const Index dim = dimension_of(modes, particles);
  if (dim > dimension_cap)
    throw CapacityError("Fock dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(dimension_cap));

  FockBasis basis;
  basis.layout_ = layout;
  basis.particles_ = std::move(particles);

  // Per-species mask lists in ascending numeric order.
  std::vector<std::vector<Mask>> masks(species);
  for (int k = 0; k < species; ++k) {
    const int n = basis.particles_[k];
    const Index count = binomial(modes, n);
    masks[k].reserve(static_cast<size_t>(count));
    if (n == 0) {
      masks[k].push_back(0);
    } else {
      Mask m = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
      for (Index i = 0; i < count; ++i) {
        masks[k].push_back(m);
        if (i + 1 < count) m = next_same_popcount(m);
      }
    }
  }

  basis.species_stride_.assign(species, 1);
  for (int k = species - 2; k >= 0; --k)
    basis.species_stride_[k] =
        basis.species_stride_[k + 1] * static_cast<Index>(masks[k + 1].size());

  basis.states_.resize(static_cast<size_t>(dim));
  std::vector<size_t> digit(species, 0);
  for (Index i = 0; i < dim; ++i) {
    Configuration c;
    c.species = species;
    for (int k = 0; k < species; ++k) c.occ[k] = masks[k][digit[k]];
    basis.states_[static_cast<size_t>(i)] = c;
    for (int k = species - 1; k >= 0; --k) {
      if (++digit[k] < masks[k].size()) break;
      digit[k] = 0;
    }
  }
  return basis;
}

Index FockBasis::index_of(const Configuration& c) const {
  Index idx = 0;
  for (int k = 0; k < layout_.species_count; ++k)
    idx += colex_rank(c.occ[k]) * species_stride_[k];
  return idx;
}

}  // namespace refinery
