#pragma once

#include <optional>
#include <string>

namespace qe {

/// Inductances of the two coupled LC circuits. Any consistent unit.
struct PhysicalCircuit {
  double l1 = 0.0;
  double l2 = 0.0;
  double l12 = 0.0;

  /// Dimensionless coupling L12 / sqrt(L1 L2).
  double coupling() const;
};

/// Dimensionless model inputs with hbar = k_B = m = omega_1 = 1:
///   H = p1^2/2 + x1^2/2 + p2^2/2 + lambda^2 x2^2/2 + g lambda x1 x2.
struct CircuitParams {
  double lambda = 1.5;  ///< omega_2 / omega_1
  double g = 0.1;       ///< coupling constant
  std::optional<PhysicalCircuit> physical;

  /// Derives g from the inductances; lambda still has to be supplied.
  static CircuitParams from_circuit(double lambda, const PhysicalCircuit& circuit);

  /// Throws Error(InvalidParams) unless lambda > 0, both exact normal-mode
  /// frequencies are real, and g matches the physical circuit (if present).
  void validate() const;
};

enum class ModeMethod { SmallAngle, Exact };

const char* to_string(ModeMethod method);

struct NormalModes {
  double phi = 0.0;     ///< rotation angle, radians
  double omega1 = 1.0;  ///< mode continuously connected to omega_1 = 1
  double omega2 = 1.0;
  ModeMethod method = ModeMethod::SmallAngle;
  /// Set when the small-angle estimate leaves |phi| < 0.3.
  std::optional<std::string> warning;
};

struct AngleEstimate {
  double phi = 0.0;
  std::optional<std::string> warning;
};

/// Small-angle regime bound on |phi| beyond which a warning is attached.
inline constexpr double kSmallAngleLimit = 0.3;

/// phi = g lambda / (lambda^2 - 1). Throws DegenerateFrequencies at lambda = 1.
AngleEstimate rotation_angle_small(const CircuitParams& params);

/// Root of tan(2 phi) = 2 g lambda / (lambda^2 - 1) that vanishes with g.
double rotation_angle_exact(const CircuitParams& params);

/// Rotation angle and normal-mode frequencies. SmallAngle uses the
/// first-order expansions of the squared frequencies, Exact the full
/// rotated quadratic form. Throws UnstableMode if a squared frequency
/// is not positive.
NormalModes normal_modes(const CircuitParams& params, ModeMethod method);

/// Eigenvalues of the potential matrix [[1, g lambda], [g lambda, lambda^2]],
/// ordered (mode 1, mode 2) by continuity with g = 0.
struct SquaredFrequencies {
  double mode1;
  double mode2;
};
SquaredFrequencies potential_eigenvalues(const CircuitParams& params);

}  // namespace qe
