#pragma once

namespace qe {

/// Physicists' Hermite polynomial H_k(x) by the three-term recurrence
/// H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite_poly(int k, double x);

/// L2-normalized oscillator eigenfunction of width `length_scale`:
/// psi_n(x / L) / sqrt(L), psi_n(y) = (2^n n! sqrt(pi))^{-1/2} e^{-y^2/2} H_n(y).
/// Evaluated through the normalized recurrence so large n does not overflow.
double ho_eigenfunction(int n, double x, double length_scale);

/// exp(-(a11 x1^2 + a22 x2^2 + 2 a12 x1 x2) + b1 x1 + b2 x2)
struct GaussianQuadraticForm {
  double a11 = 1.0;
  double a22 = 1.0;
  double a12 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  double det() const { return a11 * a22 - a12 * a12; }
  bool positive_definite() const { return a11 > 0.0 && det() > 0.0; }
};

/// Closed-form integral over the plane:
/// pi / sqrt(det A) * exp((a22 b1^2 - 2 a12 b1 b2 + a11 b2^2) / (4 det A)).
double gauss2d_integral(const GaussianQuadraticForm& form);

/// Maximum total degree supported by gauss2d_moment.
inline constexpr int kMaxMomentDegree = 4;

/// Integral of x1^i x2^j against a centred form (b1 = b2 = 0), total degree
/// at most 4. Odd total degree returns exactly zero. Even degrees use the
/// covariance Sigma = A^{-1}/2 and Isserlis' pairing rule, which is what
/// differentiating the Gaussian integral with respect to a_ij produces.
double gauss2d_moment(const GaussianQuadraticForm& form, int i, int j);

}  // namespace qe
