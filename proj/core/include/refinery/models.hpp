#pragma once

#include <array>
#include <vector>

#include <Eigen/SparseCore>

#include "refinery/assembly.hpp"
#include "refinery/fock.hpp"
#include "refinery/sparse.hpp"

namespace refinery {

using SpMatrix = Eigen::SparseMatrix<double>;

// ---------------------------------------------------------------------------
// Busch model: K distinguishable fermions in a 1D harmonic trap with equal
// delta interactions, in the harmonic-oscillator eigenbasis. Oscillator units.
// ---------------------------------------------------------------------------

struct BuschParams {
  int species = 2;       // K
  int n_max = 10;        // orbitals 0 .. n_max-1
  double coupling = 1.0;  // g
};

/// Values of the polynomial part of the oscillator eigenfunctions,
/// phi_n(x) = htilde_n(x) exp(-x^2/2), from the stable three-term recurrence.
std::vector<double> hermite_polynomial_part(int n_count, double x);
/// phi_n(x) themselves.
std::vector<double> oscillator_eigenfunctions(int n_count, double x);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
/// Gauss-Hermite rule for weight exp(-u^2) via Golub-Welsch.
Quadrature gauss_hermite(int points);

/// V[p,q,r,s] = g * integral phi_p phi_q phi_r phi_s dx, evaluated exactly
/// (quadrature order 2*n_max + 4 after rescaling the Gaussian weight).
/// Doubling the order is checked to move no entry by more than 1e-12.
TwoBodyTensor busch_interaction_tensor(int n_max, double g);

FockBasis busch_basis(const BuschParams& p, Index dimension_cap = kDefaultDimensionCap);
SparseOperator busch_hamiltonian(const BuschParams& p,
                                 Index dimension_cap = kDefaultDimensionCap);

// ---------------------------------------------------------------------------
// Periodic lattices. spacing is in fm; energies in MeV; hbar = c = 1.
// ---------------------------------------------------------------------------

struct LatticeGeometry {
  int dim = 1;            // d
  int sites_per_axis = 0;  // L
  double spacing = 1.0;    // fm

  Index site_count() const;
  LatticeGeometry coarsened() const;  // L/2 sites at spacing 2a (L must be even)
  LatticeGeometry refined() const;    // 2L sites at spacing a/2

  std::array<int, 3> coords(Index site) const;       // row-major
  Index site(const std::array<int, 3>& c) const;
  Index neighbor(Index site, int axis, int step) const;
  /// Minimal-image Euclidean distance (fm) from the grid centroid.
  double centroid_distance(Index site) const;
  /// Site->mode permutation with the 2^d children of each coarse site
  /// contiguous; identity for d = 1.
  std::vector<int> refinement_mode_order() const;
};

struct HubbardParams {
  LatticeGeometry geometry;
  double mass = 938.92;  // MeV
  std::vector<DensityCoupling> couplings;
  std::vector<double> potential;     // per site; empty means zero
  bool add_laplacian_completion = false;  // add d/(m b^2) to every diagonal
};

/// h[r,r'] = -1/(2 m b^2) for periodic nearest neighbors, h[r,r] = V_r, in
/// site (row-major) index space. For L = 2 the two neighbors coincide and the
/// bond is accumulated once per distinct ordered pair.
SpMatrix hubbard_single_particle(const HubbardParams& p);

struct WoodsSaxonParams {
  double depth = 50.0;        // V0, MeV (applied with a minus sign)
  double radius_param = 1.5;  // R0, fm
  double diffuseness = 0.5;   // alpha, fm
  int nucleon_number = 4;     // A; R = R0 * A^(1/3)
};

/// V_r = -V0 / (1 + exp((|r| - R)/alpha)) at every site of the geometry.
std::vector<double> woods_saxon_potential(const LatticeGeometry& g,
                                          const WoodsSaxonParams& p);

/// Fock-space lattice Hamiltonian: one-body hopping plus density-density
/// couplings. The basis uses the refinement mode order of the geometry.
SparseOperator hubbard_hamiltonian(const HubbardParams& p,
                                   const std::vector<int>& particles,
                                   Index dimension_cap = kDefaultDimensionCap);

FockBasis hubbard_basis(const LatticeGeometry& g, const std::vector<int>& particles,
                        Index dimension_cap = kDefaultDimensionCap);

/// Permutes a site-indexed single-particle matrix into mode index space.
RealMatrix to_mode_space(const SpMatrix& h_site, const ModeLayout& layout);

}  // namespace refinery
