#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace refinery {

using Index = std::int64_t;
using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// hbar*c in MeV*fm; lattice spacings are held in fm, energies in MeV.
inline constexpr double kHbarC = 197.3269804;

inline constexpr Index kDefaultDimensionCap = Index{1} << 24;

}  // namespace refinery
