#include "qubit_entropy/hermite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qubit_entropy/error.hpp"

namespace qe {

double hermite_poly(int k, double x) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "Hermite degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ho_eigenfunction(int n, double x, double length_scale) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "oscillator level must be non-negative");
  if (!(length_scale > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "length scale must be positive");
  }
  const double y = x / length_scale;
  // pi^{-1/4}
  const double psi0 = 0.75112554446494248286 * std::exp(-0.5 * y * y);
  double prev = 0.0;
  double cur = psi0;
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * y * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur / std::sqrt(length_scale);
}

namespace {

void require_positive_definite(const GaussianQuadraticForm& form) {
  if (!form.positive_definite()) {
    std::ostringstream msg;
    msg << "quadratic form (a11=" << form.a11 << ", a22=" << form.a22 << ", a12=" << form.a12
        << ") has det " << form.det();
    throw Error(ErrorCode::NotPositiveDefinite, msg.str());
  }
}

}  // namespace

double gauss2d_integral(const GaussianQuadraticForm& form) {
  require_positive_definite(form);
  const double det = form.det();
  const double b1 = form.b1;
  const double b2 = form.b2;
  const double shift = (form.a22 * b1 * b1 - 2.0 * form.a12 * b1 * b2 + form.a11 * b2 * b2) /
                       (4.0 * det);
  return std::numbers::pi / std::sqrt(det) * std::exp(shift);
}

double gauss2d_moment(const GaussianQuadraticForm& form, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "moment exponents must be >= 0");
  if (i + j > kMaxMomentDegree) {
    std::ostringstream msg;
    msg << "moment x1^" << i << " x2^" << j << " exceeds total degree " << kMaxMomentDegree;
    throw Error(ErrorCode::UnsupportedDegree, msg.str());
  }
  if (form.b1 != 0.0 || form.b2 != 0.0) {
    throw Error(ErrorCode::InvalidArgument, "moments are defined for centred forms only");
  }
  require_positive_definite(form);
  if ((i + j) % 2 != 0) return 0.0;

  const double det = form.det();
  const double z = std::numbers::pi / std::sqrt(det);
  const double s11 = form.a22 / (2.0 * det);
  const double s22 = form.a11 / (2.0 * det);
  const double s12 = -form.a12 / (2.0 * det);

  switch (i * 10 + j) {
    case 0: return z;
    case 20: return z * s11;
    case 2: return z * s22;
    case 11: return z * s12;
    case 40: return 3.0 * z * s11 * s11;
    case 4: return 3.0 * z * s22 * s22;
    case 31: return 3.0 * z * s11 * s12;
    case 13: return 3.0 * z * s22 * s12;
    case 22: return z * (s11 * s22 + 2.0 * s12 * s12);
    default: break;
  }
  throw Error(ErrorCode::UnsupportedDegree, "unreachable moment combination");
}

}  // namespace qe
