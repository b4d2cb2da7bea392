#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace qe {

/// Gauss-Hermite rule for the weight e^{-t^2}. `scaled_weights` hold
/// w_i e^{t_i^2}, which is what integrating a bare function needs.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMinQuadOrder = 16;
inline constexpr int kMaxQuadOrder = 512;
inline constexpr int kDefaultQuadOrder = 64;

/// Nodes are exactly symmetric about zero. Rules are built once per order,
/// cached for the life of the process and never mutated afterwards.
const GaussHermiteRule& gauss_hermite_rule(int order);

using Function1d = std::function<double(double)>;
using Function2d = std::function<double(double, double)>;

/// Integral over the line of f, after the substitution x = center + scale t.
/// Exact for f = polynomial * exp(-((x - center)/scale)^2) up to degree
/// 2 * order - 1.
double quad1d(const Function1d& f, int order, double scale = 1.0, double center = 0.0);

/// Integral over the plane of f after the linear substitution x = frame * y.
/// With frame = A^{-1/2} an integrand polynomial * exp(-x^T A x) becomes
/// polynomial * exp(-|y|^2) and the tensor rule is exact for it.
double quad2d(const Function2d& f, int order,
              const Eigen::Matrix2d& frame = Eigen::Matrix2d::Identity());

/// Symmetric A^{-1/2} for a positive-definite 2x2 matrix.
Eigen::Matrix2d gaussian_frame(const Eigen::Matrix2d& quadratic_form);

}  // namespace qe
