#include "qubit_entropy/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qubit_entropy/error.hpp"

namespace qe {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateFrequencies: return "DegenerateFrequencies";
    case ErrorCode::UnstableMode: return "UnstableMode";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAProductDimension: return "NotAProductDimension";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NonPositiveTemperature: return "NonPositiveTemperature";
    case ErrorCode::NonPositiveQ: return "NonPositiveQ";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::Io: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(ModeMethod method) {
  return method == ModeMethod::SmallAngle ? "small-angle" : "exact";
}

double PhysicalCircuit::coupling() const { return l12 / std::sqrt(l1 * l2); }

CircuitParams CircuitParams::from_circuit(double lambda, const PhysicalCircuit& circuit) {
  if (!(circuit.l1 > 0.0) || !(circuit.l2 > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "inductances L1 and L2 must be positive");
  }
  CircuitParams params;
  params.lambda = lambda;
  params.g = circuit.coupling();
  params.physical = circuit;
  return params;
}

SquaredFrequencies potential_eigenvalues(const CircuitParams& params) {
  const double lam = params.lambda;
  const double lam2 = lam * lam;
  const double mean = 0.5 * (1.0 + lam2);
  const double half_gap = 0.5 * (lam2 - 1.0);
  const double off = params.g * lam;
  const double radius = std::hypot(half_gap, off);
  // Lower branch stays attached to omega_1 = 1 whenever lambda >= 1.
  if (lam >= 1.0) return {mean - radius, mean + radius};
  return {mean + radius, mean - radius};
}

void CircuitParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidParams, "lambda must be a positive finite number");
  }
  if (!std::isfinite(g)) throw Error(ErrorCode::InvalidParams, "g must be finite");
  const auto sq = potential_eigenvalues(*this);
  if (!(sq.mode1 > 0.0) || !(sq.mode2 > 0.0)) {
    std::ostringstream msg;
    msg << "coupling g=" << g << " makes the potential indefinite at lambda=" << lambda;
    throw Error(ErrorCode::InvalidParams, msg.str());
  }
  if (physical) {
    const double derived = physical->coupling();
    if (!(std::abs(derived - g) <= 1e-12 * std::max(std::abs(g), std::abs(derived)))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "g=" << g << " disagrees with L12/sqrt(L1 L2)=" << derived;
      throw Error(ErrorCode::InvalidParams, msg.str());
    }
  }
}

AngleEstimate rotation_angle_small(const CircuitParams& params) {
  params.validate();
  const double lam = params.lambda;
  if (lam == 1.0) {
    throw Error(ErrorCode::DegenerateFrequencies,
                "small-angle rotation is singular at lambda = 1");
  }
  AngleEstimate out;
  out.phi = params.g * lam / (lam * lam - 1.0);
  if (!(std::abs(out.phi) < kSmallAngleLimit)) {
    std::ostringstream msg;
    msg << "|phi|=" << std::abs(out.phi) << " is outside the small-angle regime (< "
        << kSmallAngleLimit << ")";
    out.warning = msg.str();
  }
  return out;
}

double rotation_angle_exact(const CircuitParams& params) {
  params.validate();
  const double lam = params.lambda;
  const double num = 2.0 * params.g * lam;
  const double den = lam * lam - 1.0;
  // For lambda < 1 the principal atan2 branch would start at pi/2.
  if (den < 0.0) return 0.5 * std::atan(num / den);
  return 0.5 * std::atan2(num, den);
}

NormalModes normal_modes(const CircuitParams& params, ModeMethod method) {
  const double lam = params.lambda;
  const double g = params.g;
  NormalModes modes;
  modes.method = method;
  if (lam > 0.0 && std::isfinite(g)) {
    const auto exact_sq = potential_eigenvalues(params);
    if (!(exact_sq.mode1 > 0.0) || !(exact_sq.mode2 > 0.0)) {
      std::ostringstream msg;
      msg << "|g|=" << std::abs(g) << " is too large: the coupled potential is unbounded below";
      throw Error(ErrorCode::UnstableMode, msg.str());
    }
  }

  double w1sq = 0.0;
  double w2sq = 0.0;
  if (method == ModeMethod::SmallAngle) {
    const auto angle = rotation_angle_small(params);
    const double phi = angle.phi;
    modes.phi = phi;
    modes.warning = angle.warning;
    w1sq = 1.0 - 2.0 * g * lam * phi + lam * lam * phi * phi;
    w2sq = phi * phi + lam * lam + 2.0 * g * lam * phi;
  } else {
    const double phi = rotation_angle_exact(params);
    modes.phi = phi;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    w1sq = lam * lam * s * s + c * c - 2.0 * g * lam * s * c;
    w2sq = s * s + lam * lam * c * c + 2.0 * g * lam * s * c;
  }

  if (!(w1sq > 0.0) || !(w2sq > 0.0)) {
    std::ostringstream msg;
    msg << "squared mode frequencies (" << w1sq << ", " << w2sq << ") at g=" << g
        << ", lambda=" << lam << " are not both positive";
    throw Error(ErrorCode::UnstableMode, msg.str());
  }
  modes.omega1 = std::sqrt(w1sq);
  modes.omega2 = std::sqrt(w2sq);
  return modes;
}

}  // namespace qe
