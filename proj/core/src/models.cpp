#include "refinery/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/Eigenvalues>

namespace refinery {

std::vector<double> hermite_polynomial_part(int n_count, double x) {
  std::vector<double> h(static_cast<size_t>(n_count));
  if (n_count == 0) return h;
  h[0] = std::pow(M_PI, -0.25);
  if (n_count > 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int n = 1; n + 1 < n_count; ++n)
    h[static_cast<size_t>(n) + 1] = std::sqrt(2.0 / (n + 1)) * x * h[static_cast<size_t>(n)] -
                                    std::sqrt(double(n) / (n + 1)) * h[static_cast<size_t>(n) - 1];
  return h;
}

std::vector<double> oscillator_eigenfunctions(int n_count, double x) {
  std::vector<double> phi = hermite_polynomial_part(n_count, x);
  const double gauss = std::exp(-0.5 * x * x);
  for (double& v : phi) v *= gauss;
  return phi;
}

Quadrature gauss_hermite(int points) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
  for (int k = 1; k < points; ++k) {
    const double b = std::sqrt(k / 2.0);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Quadrature q;
  q.nodes.resize(static_cast<size_t>(points));
  q.weights.resize(static_cast<size_t>(points));
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < points; ++i) {
    q.nodes[static_cast<size_t>(i)] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    q.weights[static_cast<size_t>(i)] = sqrt_pi * v0 * v0;
  }
  return q;
}

namespace {

TwoBodyTensor busch_tensor_with_order(int n_max, double g, int order) {
  const Quadrature q = gauss_hermite(order);
  TwoBodyTensor V(n_max);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // substitute x = u / sqrt(2): the exp(-2x^2) Gaussian of the four
  // eigenfunctions becomes the quadrature weight exactly.
  std::vector<std::vector<double>> h(q.nodes.size());
  for (size_t i = 0; i < q.nodes.size(); ++i)
    h[i] = hermite_polynomial_part(n_max, q.nodes[i] * inv_sqrt2);
  for (int p = 0; p < n_max; ++p)
    for (int qq = 0; qq < n_max; ++qq)
      for (int r = 0; r < n_max; ++r)
        for (int s = 0; s < n_max; ++s) {
          if ((p + qq + r + s) % 2 != 0) continue;  // parity
          double acc = 0.0;
          for (size_t i = 0; i < q.nodes.size(); ++i)
            acc += q.weights[i] * h[i][static_cast<size_t>(p)] * h[i][static_cast<size_t>(qq)] *
                   h[i][static_cast<size_t>(r)] * h[i][static_cast<size_t>(s)];
          V.at(p, qq, r, s) = g * acc * inv_sqrt2;
        }
  return V;
}

}  // namespace

TwoBodyTensor busch_interaction_tensor(int n_max, double g) {
  const int order = 2 * n_max + 4;
  TwoBodyTensor V = busch_tensor_with_order(n_max, g, order);
  const TwoBodyTensor check = busch_tensor_with_order(n_max, g, 2 * order);
  double drift = 0.0;
  for (size_t i = 0; i < V.v.size(); ++i)
    drift = std::max(drift, std::abs(V.v[i] - check.v[i]));
  if (drift > 1e-12)
    throw NumericalError("Busch quadrature not converged: order-doubling drift " +
                         std::to_string(drift));
  return V;
}

FockBasis busch_basis(const BuschParams& p, Index dimension_cap) {
  if (p.n_max < 1 || p.species < 2)
    throw ConfigError("Busch model needs n_max >= 1 and K >= 2");
  const ModeLayout layout = ModeLayout::identity(p.species, p.n_max);
  return enumerate_basis(layout, std::vector<int>(static_cast<size_t>(p.species), 1),
                         dimension_cap);
}

SparseOperator busch_hamiltonian(const BuschParams& p, Index dimension_cap) {
  const FockBasis basis = busch_basis(p, dimension_cap);
  RealMatrix h = RealMatrix::Zero(p.n_max, p.n_max);
  for (int n = 0; n < p.n_max; ++n) h(n, n) = n + 0.5;
  SparseOperator one = build_one_body(basis, h);
  if (p.coupling == 0.0) return one;
  SparseOperator two = build_two_body_tensor(basis, busch_interaction_tensor(p.n_max, p.coupling));
  return SparseOperator::weighted_sum(1.0, one, 1.0, two);
}

Index LatticeGeometry::site_count() const {
  Index n = 1;
  for (int a = 0; a < dim; ++a) n *= sites_per_axis;
  return n;
}

LatticeGeometry LatticeGeometry::coarsened() const {
  if (sites_per_axis % 2 != 0)
    throw ConfigError("coarsening requires an even number of sites per axis");
  return {dim, sites_per_axis / 2, spacing * 2.0};
}

LatticeGeometry LatticeGeometry::refined() const {
  return {dim, sites_per_axis * 2, spacing / 2.0};
}

std::array<int, 3> LatticeGeometry::coords(Index s) const {
  std::array<int, 3> c{0, 0, 0};
  for (int a = dim - 1; a >= 0; --a) {
    c[static_cast<size_t>(a)] = static_cast<int>(s % sites_per_axis);
    s /= sites_per_axis;
  }
  return c;
}

Index LatticeGeometry::site(const std::array<int, 3>& c) const {
  Index s = 0;
  for (int a = 0; a < dim; ++a) s = s * sites_per_axis + c[static_cast<size_t>(a)];
  return s;
}

Index LatticeGeometry::neighbor(Index s, int axis, int step) const {
  std::array<int, 3> c = coords(s);
  c[static_cast<size_t>(axis)] =
      ((c[static_cast<size_t>(axis)] + step) % sites_per_axis + sites_per_axis) %
      sites_per_axis;
  return site(c);
}

double LatticeGeometry::centroid_distance(Index s) const {
  const std::array<int, 3> c = coords(s);
  const double period = spacing * sites_per_axis;
  const double center = spacing * (sites_per_axis - 1) / 2.0;
  double d2 = 0.0;
  for (int a = 0; a < dim; ++a) {
    double dx = spacing * c[static_cast<size_t>(a)] - center;
    dx -= period * std::round(dx / period);
    d2 += dx * dx;
  }
  return std::sqrt(d2);
}

std::vector<int> LatticeGeometry::refinement_mode_order() const {
  if (sites_per_axis % 2 != 0)
    throw ConfigError("refinement mode order requires even sites per axis");
  const LatticeGeometry coarse = coarsened();
  const Index n = site_count();
  std::vector<int> site_to_mode(static_cast<size_t>(n));
  for (Index s = 0; s < n; ++s) {
    const std::array<int, 3> c = coords(s);
    std::array<int, 3> parent{0, 0, 0};
    int offset = 0;
    for (int a = 0; a < dim; ++a) {
      parent[static_cast<size_t>(a)] = c[static_cast<size_t>(a)] / 2;
      // axis refined first is the most significant child bit
      offset = (offset << 1) | (c[static_cast<size_t>(a)] & 1);
    }
    site_to_mode[static_cast<size_t>(s)] =
        static_cast<int>((coarse.site(parent) << dim) | offset);
  }
  return site_to_mode;
}

SpMatrix hubbard_single_particle(const HubbardParams& p) {
  const LatticeGeometry& g = p.geometry;
  const Index n = g.site_count();
  if (!p.potential.empty() && static_cast<Index>(p.potential.size()) != n)
    throw DimensionError("potential length does not match site count");

  const double b = g.spacing / kHbarC;  // MeV^-1
  const double hop = -1.0 / (2.0 * p.mass * b * b);
  const double completion = p.add_laplacian_completion ? g.dim / (p.mass * b * b) : 0.0;

  std::vector<Eigen::Triplet<double>> trip;
  std::set<std::pair<Index, Index>> bonds;  // distinct ordered pairs
  for (Index s = 0; s < n; ++s) {
    double diag = completion;
    if (!p.potential.empty()) diag += p.potential[static_cast<size_t>(s)];
    if (diag != 0.0) trip.emplace_back(static_cast<int>(s), static_cast<int>(s), diag);
    for (int a = 0; a < g.dim; ++a)
      for (int step : {+1, -1}) {
        const Index t = g.neighbor(s, a, step);
        if (t != s) bonds.insert({s, t});
      }
  }
  for (const auto& [s, t] : bonds)
    trip.emplace_back(static_cast<int>(s), static_cast<int>(t), hop);

  SpMatrix h(static_cast<int>(n), static_cast<int>(n));
  h.setFromTriplets(trip.begin(), trip.end());
  return h;
}

std::vector<double> woods_saxon_potential(const LatticeGeometry& g,
                                          const WoodsSaxonParams& p) {
  if (p.diffuseness <= 0.0 || p.depth <= 0.0)
    throw ConfigError("Woods-Saxon parameters require alpha > 0 and V0 > 0");
  const double radius = p.radius_param * std::cbrt(static_cast<double>(p.nucleon_number));
  const Index n = g.site_count();
  std::vector<double> v(static_cast<size_t>(n));
  for (Index s = 0; s < n; ++s) {
    const double r = g.centroid_distance(s);
    v[static_cast<size_t>(s)] = -p.depth / (1.0 + std::exp((r - radius) / p.diffuseness));
  }
  return v;
}

FockBasis hubbard_basis(const LatticeGeometry& g, const std::vector<int>& particles,
                        Index dimension_cap) {
  const Index n = g.site_count();
  ModeLayout layout =
      (g.sites_per_axis % 2 == 0)
          ? ModeLayout::with_site_order(static_cast<int>(particles.size()),
                                        g.refinement_mode_order())
          : ModeLayout::identity(static_cast<int>(particles.size()), static_cast<int>(n));
  return enumerate_basis(layout, particles, dimension_cap);
}

RealMatrix to_mode_space(const SpMatrix& h_site, const ModeLayout& layout) {
  const int n = static_cast<int>(h_site.rows());
  RealMatrix h = RealMatrix::Zero(n, n);
  for (int col = 0; col < h_site.outerSize(); ++col)
    for (SpMatrix::InnerIterator it(h_site, col); it; ++it)
      h(layout.mode_of_site(static_cast<int>(it.row())),
        layout.mode_of_site(col)) = it.value();
  return h;
}

SparseOperator hubbard_hamiltonian(const HubbardParams& p,
                                   const std::vector<int>& particles,
                                   Index dimension_cap) {
  if (p.geometry.dim >= 3) {
    const Index dim = FockBasis::dimension_of(static_cast<int>(p.geometry.site_count()),
                                              particles);
    if (dim > dimension_cap)
      throw CapacityError(
          "3D interacting Fock space of dimension " + std::to_string(dim) +
          " exceeds the cap; non-interacting systems belong in the determinant path");
  }
  const FockBasis basis = hubbard_basis(p.geometry, particles, dimension_cap);
  const RealMatrix h = to_mode_space(hubbard_single_particle(p), basis.layout());
  SparseOperator one = build_one_body(basis, h);
  if (p.couplings.empty()) return one;
  SparseOperator two = build_density_density(basis, p.couplings);
  return SparseOperator::weighted_sum(1.0, one, 1.0, two);
}

}  // namespace refinery
