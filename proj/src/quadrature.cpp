#include "qubit_entropy/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qubit_entropy/error.hpp"

namespace qe {

namespace {

// Normalized Hermite functions psi_{n-1}(t), psi_n(t), each carrying e^{-t^2/2}.
std::pair<double, double> hermite_function_pair(int n, double t) {
  double prev = 0.0;
  double cur = 0.75112554446494248286 * std::exp(-0.5 * t * t);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

std::unique_ptr<const GaussHermiteRule> build_rule(int n) {
  // Golub-Welsch eigenvalues seed the nodes, Newton on psi_n polishes them.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
  jacobi.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& seeds = jacobi.eigenvalues();

  auto rule = std::make_unique<GaussHermiteRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  rule->scaled_weights.resize(n);

  const double sqrt_2n = std::sqrt(2.0 * n);
  for (int i = n / 2; i < n; ++i) {
    double t = seeds(i);
    if (n % 2 == 1 && i == n / 2) t = 0.0;
    for (int iter = 0; iter < 8 && t != 0.0; ++iter) {
      const auto [pm1, p] = hermite_function_pair(n, t);
      const double step = p / (sqrt_2n * pm1 - t * p);
      t -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
    }
    const double pm1 = hermite_function_pair(n, t).first;
    const double scaled = 1.0 / (n * pm1 * pm1);
    const int mirror = n - 1 - i;
    rule->nodes[i] = t;
    rule->nodes[mirror] = -t;
    rule->scaled_weights[i] = rule->scaled_weights[mirror] = scaled;
    rule->weights[i] = rule->weights[mirror] =
        std::exp(-t * t - std::log(double(n)) - 2.0 * std::log(std::abs(pm1)));
  }
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite_rule(int order) {
  if (order < 1 || order > kMaxQuadOrder) {
    std::ostringstream msg;
    msg << "Gauss-Hermite order " << order << " outside [1, " << kMaxQuadOrder << "]";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussHermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = build_rule(order);
  return *slot;
}

namespace {

void require_order(int order) {
  if (order < kMinQuadOrder) {
    std::ostringstream msg;
    msg << "quadrature order " << order << " is below the minimum " << kMinQuadOrder;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

}  // namespace

double quad1d(const Function1d& f, int order, double scale, double center) {
  require_order(order);
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "quadrature scale must be positive");
  const auto& rule = gauss_hermite_rule(order);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    sum += rule.scaled_weights[i] * f(center + scale * rule.nodes[i]);
  }
  return scale * sum;
}

double quad2d(const Function2d& f, int order, const Eigen::Matrix2d& frame) {
  require_order(order);
  const double jacobian = std::abs(frame.determinant());
  if (!(jacobian > 0.0)) throw Error(ErrorCode::InvalidArgument, "quadrature frame is singular");
  const auto& rule = gauss_hermite_rule(order);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    const double yi = rule.nodes[i];
    double row = 0.0;
    for (int j = 0; j < order; ++j) {
      const double yj = rule.nodes[j];
      const double x1 = frame(0, 0) * yi + frame(0, 1) * yj;
      const double x2 = frame(1, 0) * yi + frame(1, 1) * yj;
      row += rule.scaled_weights[j] * f(x1, x2);
    }
    sum += rule.scaled_weights[i] * row;
  }
  return jacobian * sum;
}

Eigen::Matrix2d gaussian_frame(const Eigen::Matrix2d& quadratic_form) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(quadratic_form);
  const Eigen::Vector2d mu = eig.eigenvalues();
  if (!(mu(0) > 0.0) || !(mu(1) > 0.0)) {
    throw Error(ErrorCode::NotPositiveDefinite, "Gaussian frame needs a positive-definite form");
  }
  const Eigen::Matrix2d& v = eig.eigenvectors();
  return v * mu.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
}

}  // namespace qe
