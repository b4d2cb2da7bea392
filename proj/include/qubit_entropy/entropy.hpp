#pragma once

#include <Eigen/Core>

#include "qubit_entropy/state.hpp"

namespace qe {

/// Within this distance of q = 1 the Tsallis entropy is evaluated as von Neumann.
inline constexpr double kVonNeumannWindow = 1e-6;

/// Eigenvalues of the state, renormalized to sum 1. Negatives and values below
/// dim * machine epsilon * the largest eigenvalue are set to zero.
Eigen::VectorXd spectrum(const DensityMatrix& rho);

/// -sum lambda ln lambda (natural log, 0 ln 0 = 0).
double von_neumann_entropy(const DensityMatrix& rho);

/// S_q = -Tr rho ln_q rho = (1 - sum lambda^q) / (q - 1); q > 0.
double tsallis_entropy(const DensityMatrix& rho, double q);

/// Same, on an already-normalized probability vector.
double tsallis_entropy(const Eigen::VectorXd& probabilities, double q);

struct EntropyReport {
  double q = 1.0;
  double s_joint = 0.0;
  double s_1 = 0.0;
  double s_2 = 0.0;
  double mutual_info = 0.0;           ///< s_1 + s_2 - s_joint
  double subadditivity_margin = 0.0;  ///< identical to mutual_info
  double purity = 0.0;
  double temperature = 0.0;
};

/// Entropies of a two-mode state and its marginals. Subadditivity holds
/// when subadditivity_margin >= 0; the report records it without asserting.
EntropyReport analyze_bipartite(const DensityMatrix& rho, double q);

}  // namespace qe
