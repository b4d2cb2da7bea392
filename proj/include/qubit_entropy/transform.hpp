#pragma once

#include <Eigen/Core>

#include "qubit_entropy/hermite.hpp"
#include "qubit_entropy/model.hpp"
#include "qubit_entropy/quadrature.hpp"

namespace qe {

enum class TransformMethod { ClosedForm, Quadrature };

const char* to_string(TransformMethod method);

/// Which set of closed-form expressions to evaluate. `Rederived` is the
/// one the pipeline uses. `Published` evaluates the coefficient and element
/// formulas as originally published; they do not reduce to the identity at
/// g = 0 and are kept for comparison only.
enum class ClosedFormVariant { Rederived, Published };

/// Overlaps U_{nm,n'm'} = <n m | n' m'>~ between the product Fock basis of
/// the uncoupled oscillators (rows) and of the rotated normal modes
/// (columns). Row index n*d + m, column index n'*d + m', second label fastest.
struct TransformTensor {
  int dim_per_mode = 2;
  Eigen::MatrixXd entries;
  TransformMethod method = TransformMethod::ClosedForm;

  int dim() const { return dim_per_mode * dim_per_mode; }
  double at(int n, int m, int np, int mp) const {
    return entries(n * dim_per_mode + m, np * dim_per_mode + mp);
  }
};

/// Quadratic form of the overlap integrand's Gaussian,
///   x1^2/2 + lambda x2^2/2 + Omega1 x1'^2/2 + Omega2 x2'^2/2,
/// with x1' = x1 + phi x2, x2' = x2 - phi x1. The published variant returns
/// the published a11, a22, a12 instead.
GaussianQuadraticForm gaussian_coefficients(const CircuitParams& params, const NormalModes& modes,
                                            ClosedFormVariant variant = ClosedFormVariant::Rederived);

/// True when the total index parity n+m+n'+m' is odd; those overlaps vanish.
constexpr bool parity_odd(int n, int m, int np, int mp) { return ((n + m + np + mp) & 1) != 0; }

/// Closed-form overlap for indices in {0, 1}. Needs small-angle modes.
double overlap_element_closed(int n, int m, int np, int mp, const CircuitParams& params,
                              const NormalModes& modes,
                              ClosedFormVariant variant = ClosedFormVariant::Rederived);

/// Direct tensor Gauss-Hermite evaluation of the overlap integral, any
/// level. Small-angle modes use the linearized substitution of the closed
/// forms; exact modes use the full rotation.
double overlap_element_quadrature(int n, int m, int np, int mp, const CircuitParams& params,
                                  const NormalModes& modes, int order = kDefaultQuadOrder);

/// Smallest order >= `base_order` (doubling) at which U_0000 agrees with
/// the next doubling to 1e-10.
int resolve_quadrature_order(const CircuitParams& params, const NormalModes& modes,
                             int base_order = kDefaultQuadOrder);

TransformTensor build_transform(const CircuitParams& params, const NormalModes& modes, int d,
                                TransformMethod method, int order = kDefaultQuadOrder);

/// max |(U^T U - I)_{ij}| over the columns of the lowest `block` levels per
/// mode. block = 0 means every column.
double orthogonality_defect(const TransformTensor& u, int block = 0);

}  // namespace qe
