#pragma once

#include <Eigen/Core>

#include "qubit_entropy/model.hpp"
#include "qubit_entropy/transform.hpp"

namespace qe {

enum class Basis { NormalMode, Physical };

/// Real symmetric, unit-trace, positive-semidefinite density matrix over a
/// truncated Fock space. Two-mode states use index n*d + m.
struct DensityMatrix {
  Eigen::MatrixXd entries;
  Basis basis = Basis::Physical;
  double temperature = 0.0;  ///< provenance only

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Eigenvalues above this negative threshold are treated as rounding and clamped.
inline constexpr double kClampThreshold = 1e-10;
/// Below this temperature the thermal state is the ground-state projector.
inline constexpr double kGroundStateTemperature = 1e-8;

/// Builds a DensityMatrix from an arbitrary symmetric matrix: symmetrizes,
/// clamps eigenvalues in [-1e-10, 0) to zero and renormalizes to unit
/// trace. Throws NotPositiveSemidefinite for anything more negative.
DensityMatrix make_density(const Eigen::MatrixXd& m, Basis basis, double temperature);

/// Boltzmann populations exp(-E_nm / T) / Z in the normal-mode product basis,
/// E_nm = Omega1 (n + 1/2) + Omega2 (m + 1/2), Z the finite sum over d^2 levels.
DensityMatrix thermal_density(const NormalModes& modes, double temperature, int d);

/// Expresses a normal-mode-basis state in the physical product basis,
/// rho~ = U rho U^T for U with rows in the physical basis, then symmetrizes
/// and renormalizes (truncation leaks trace).
DensityMatrix transform_density(const DensityMatrix& rho, const TransformTensor& u);

/// Reduced state of mode 1 or mode 2 of a d^2-dimensional state.
DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// Diagnostics for how well the d_small^2 block represents the state.
struct SubspaceValidity {
  double mu_block = 0.0;       ///< purity of the renormalized d_small^2 block
  double mu_complement = 0.0;  ///< Tr of the square of the remaining block (not renormalized)
  double offdiag_sum = 0.0;    ///< sum of |off-diagonal| entries of the renormalized block
};

/// Uses a precomputed transform at the large truncation; the caller picks
/// its method (only quadrature reaches d > 2).
SubspaceValidity subspace_validity(const TransformTensor& big, const NormalModes& modes,
                                   double temperature, int d_small);

SubspaceValidity subspace_validity(const NormalModes& modes, const CircuitParams& params,
                                   double temperature, int d_small, int d_big,
                                   int order = kDefaultQuadOrder);

}  // namespace qe
