#include "qubit_entropy/state.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qubit_entropy/error.hpp"

namespace qe {

namespace {

void symmetrize_in_place(Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double mean = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = mean;
      m(j, i) = mean;
    }
  }
}

int product_levels(int dim) {
  const int d = static_cast<int>(std::lround(std::sqrt(double(dim))));
  if (d * d != dim || d < 1) {
    std::ostringstream msg;
    msg << "dimension " << dim << " is not a perfect square";
    throw Error(ErrorCode::NotAProductDimension, msg.str());
  }
  return d;
}

}  // namespace

DensityMatrix make_density(const Eigen::MatrixXd& m, Basis basis, double temperature) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
  }
  Eigen::MatrixXd sym = m;
  symmetrize_in_place(sym);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  const Eigen::VectorXd& spectrum = eig.eigenvalues();
  const double scale = std::max(1.0, spectrum.cwiseAbs().maxCoeff());
  if (spectrum.minCoeff() < -kClampThreshold * scale) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << spectrum.minCoeff() << " is below -" << kClampThreshold;
    throw Error(ErrorCode::NotPositiveSemidefinite, msg.str());
  }
  if (spectrum.minCoeff() < 0.0) {
    const Eigen::VectorXd clamped = spectrum.cwiseMax(0.0);
    sym = eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().transpose();
    symmetrize_in_place(sym);
  }

  const double trace = sym.trace();
  if (!(trace > 0.0)) throw Error(ErrorCode::NotPositiveSemidefinite, "density matrix has zero trace");
  return DensityMatrix{sym / trace, basis, temperature};
}

DensityMatrix thermal_density(const NormalModes& modes, double temperature, int d) {
  if (!(temperature > 0.0)) {
    std::ostringstream msg;
    msg << "temperature must be positive, got " << temperature;
    throw Error(ErrorCode::NonPositiveTemperature, msg.str());
  }
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "thermal state needs at least 2 levels per mode");
  const int dim = d * d;
  DensityMatrix rho{Eigen::MatrixXd::Zero(dim, dim), Basis::NormalMode, temperature};
  if (temperature < kGroundStateTemperature) {
    rho.entries(0, 0) = 1.0;
    return rho;
  }
  // Energies relative to E_00, so the ground weight is exactly 1.
  double z = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const double excitation = modes.omega1 * n + modes.omega2 * m;
      const double w = std::exp(-excitation / temperature);
      rho.entries(n * d + m, n * d + m) = w;
      z += w;
    }
  }
  rho.entries /= z;
  return rho;
}

DensityMatrix transform_density(const DensityMatrix& rho, const TransformTensor& u) {
  if (rho.dim() != u.dim()) {
    std::ostringstream msg;
    msg << "state dimension " << rho.dim() << " does not match transform dimension " << u.dim();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  if (rho.basis != Basis::NormalMode) {
    throw Error(ErrorCode::InvalidArgument, "transform_density expects a normal-mode-basis state");
  }
  const Eigen::MatrixXd physical = u.entries * rho.entries * u.entries.transpose();
  return make_density(physical, Basis::Physical, rho.temperature);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem) {
  if (subsystem != 1 && subsystem != 2) {
    throw Error(ErrorCode::InvalidArgument, "subsystem must be 1 or 2");
  }
  const int d = product_levels(rho.dim());
  DensityMatrix out{Eigen::MatrixXd::Zero(d, d), rho.basis, rho.temperature};
  const auto& r = rho.entries;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      double sum = 0.0;
      for (int k = 0; k < d; ++k) {
        sum += subsystem == 1 ? r(a * d + k, b * d + k) : r(k * d + a, k * d + b);
      }
      out.entries(a, b) = sum;
    }
  }
  return out;
}

double purity(const DensityMatrix& rho) { return rho.entries.cwiseAbs2().sum(); }

SubspaceValidity subspace_validity(const TransformTensor& big, const NormalModes& modes,
                                   double temperature, int d_small) {
  const int d_big = big.dim_per_mode;
  if (d_small < 1 || d_small >= d_big) {
    std::ostringstream msg;
    msg << "need 1 <= d_small < d_big, got " << d_small << " and " << d_big;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const DensityMatrix full = transform_density(thermal_density(modes, temperature, d_big), big);

  std::vector<int> inside;
  std::vector<int> outside;
  for (int n = 0; n < d_big; ++n) {
    for (int m = 0; m < d_big; ++m) {
      (n < d_small && m < d_small ? inside : outside).push_back(n * d_big + m);
    }
  }
  const auto& r = full.entries;
  Eigen::MatrixXd block(inside.size(), inside.size());
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = 0; j < inside.size(); ++j) block(i, j) = r(inside[i], inside[j]);
  block /= block.trace();

  SubspaceValidity out;
  out.mu_block = block.cwiseAbs2().sum();
  for (Eigen::Index i = 0; i < block.rows(); ++i)
    for (Eigen::Index j = 0; j < block.cols(); ++j)
      if (i != j) out.offdiag_sum += std::abs(block(i, j));
  double comp = 0.0;
  for (int a : outside)
    for (int b : outside) comp += r(a, b) * r(a, b);
  out.mu_complement = comp;
  return out;
}

SubspaceValidity subspace_validity(const NormalModes& modes, const CircuitParams& params,
                                   double temperature, int d_small, int d_big, int order) {
  if (d_big <= d_small) {
    throw Error(ErrorCode::InvalidArgument, "d_big must exceed d_small");
  }
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::NonPositiveTemperature, "temperature must be positive");
  }
  const auto big = build_transform(params, modes, d_big, TransformMethod::Quadrature, order);
  return subspace_validity(big, modes, temperature, d_small);
}

}  // namespace qe
