#include "qubit_entropy/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qubit_entropy/error.hpp"

namespace qe {

Eigen::VectorXd spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(rho.entries, Eigen::EigenvaluesOnly);
  Eigen::VectorXd p = eig.eigenvalues().cwiseMax(0.0);
  // The solver cannot resolve eigenvalues below this; x^q for small q would amplify the noise.
  const double floor = static_cast<double>(p.size()) * std::numeric_limits<double>::epsilon() *
                       p.maxCoeff();
  p = (p.array() > floor).select(p, 0.0);
  const double total = p.sum();
  if (total > 0.0) p /= total;
  return p;
}

namespace {

double von_neumann(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann(spectrum(rho)); }

double tsallis_entropy(const Eigen::VectorXd& p, double q) {
  if (!(q > 0.0)) {
    std::ostringstream msg;
    msg << "deformation parameter q must be positive, got " << q;
    throw Error(ErrorCode::NonPositiveQ, msg.str());
  }
  if (std::abs(q - 1.0) < kVonNeumannWindow) return von_neumann(p);
  double power_sum = 0.0;
  for (double x : p) {
    if (x > 0.0) power_sum += std::pow(x, q);
  }
  return (1.0 - power_sum) / (q - 1.0);
}

double tsallis_entropy(const DensityMatrix& rho, double q) {
  if (!(q > 0.0)) {
    std::ostringstream msg;
    msg << "deformation parameter q must be positive, got " << q;
    throw Error(ErrorCode::NonPositiveQ, msg.str());
  }
  return tsallis_entropy(spectrum(rho), q);
}

EntropyReport analyze_bipartite(const DensityMatrix& rho, double q) {
  EntropyReport report;
  report.q = q;
  report.temperature = rho.temperature;
  report.s_joint = tsallis_entropy(rho, q);
  report.s_1 = tsallis_entropy(partial_trace(rho, 1), q);
  report.s_2 = tsallis_entropy(partial_trace(rho, 2), q);
  report.subadditivity_margin = report.s_1 + report.s_2 - report.s_joint;
  report.mutual_info = report.subadditivity_margin;
  report.purity = purity(rho);
  return report;
}

}  // namespace qe
