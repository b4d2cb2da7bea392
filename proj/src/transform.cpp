#include "qubit_entropy/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/LU>

#include "qubit_entropy/error.hpp"
#include "qubit_entropy/kernels.hpp"

namespace qe {

const char* to_string(TransformMethod method) {
  return method == TransformMethod::ClosedForm ? "closed-form" : "quadrature";
}

namespace {

void require_small_angle(const NormalModes& modes) {
  if (modes.method != ModeMethod::SmallAngle) {
    throw Error(ErrorCode::InvalidArgument,
                "closed-form overlaps are defined for small-angle normal modes only");
  }
}

bool is_unrotated(const CircuitParams& params, const NormalModes& modes) {
  return modes.phi == 0.0 && modes.omega1 == 1.0 && modes.omega2 == params.lambda;
}

// x' = R x for the substitution each mode method implies.
Eigen::Matrix2d substitution(const NormalModes& modes) {
  Eigen::Matrix2d r;
  if (modes.method == ModeMethod::SmallAngle) {
    r << 1.0, modes.phi, -modes.phi, 1.0;
  } else {
    const double c = std::cos(modes.phi);
    const double s = std::sin(modes.phi);
    r << c, s, -s, c;
  }
  return r;
}

// Squared small-angle frequencies as they appear inside the published formulas.
struct PublishedFrequencies {
  double mode1_sq;
  double mode2_sq;
};

PublishedFrequencies published_frequencies(const CircuitParams& params, double phi) {
  const double lam = params.lambda;
  const double g = params.g;
  return {lam * lam * phi * phi + 1.0 - 2.0 * g * lam * phi,
          phi * phi + lam * lam + 2.0 * g * lam * phi};
}

double closed_rederived(int n, int m, int np, int mp, const CircuitParams& params,
                        const NormalModes& modes) {
  const auto form = gaussian_coefficients(params, modes, ClosedFormVariant::Rederived);
  const double phi = modes.phi;
  const double sl = std::sqrt(params.lambda);
  const double s1 = std::sqrt(modes.omega1);
  const double s2 = std::sqrt(modes.omega2);
  // 1 / (pi K) with K = sqrt(l L1 L2) = (lambda Omega1 Omega2)^{-1/4}.
  const double pre = std::sqrt(sl * s1 * s2) / std::numbers::pi;
  auto mom = [&](int i, int j) { return gauss2d_moment(form, i, j); };

  // Each H_1 contributes sqrt(2) * (argument / width); x1' = x1 + phi x2,
  // x2' = x2 - phi x1.
  switch (n * 1000 + m * 100 + np * 10 + mp) {
    case 0:  // 0000
      return pre * mom(0, 0);
    case 11:  // 0011: x1' x2'
      return pre * 2.0 * s1 * s2 *
             ((1.0 - phi * phi) * mom(1, 1) + phi * (mom(0, 2) - mom(2, 0)));
    case 101:  // 0101: x2 x2'
      return pre * 2.0 * sl * s2 * (mom(0, 2) - phi * mom(1, 1));
    case 110:  // 0110: x2 x1'
      return pre * 2.0 * sl * s1 * (mom(1, 1) + phi * mom(0, 2));
    case 1001:  // 1001: x1 x2'
      return pre * 2.0 * s2 * (mom(1, 1) - phi * mom(2, 0));
    case 1010:  // 1010: x1 x1'
      return pre * 2.0 * s1 * (mom(2, 0) + phi * mom(1, 1));
    case 1100:  // 1100: x1 x2
      return pre * 2.0 * sl * mom(1, 1);
    case 1111:  // 1111: x1 x2 x1' x2'
      return pre * 4.0 * sl * s1 * s2 *
             ((1.0 - phi * phi) * mom(2, 2) + phi * (mom(1, 3) - mom(3, 1)));
    default:
      break;
  }
  throw Error(ErrorCode::IndexOutOfRange, "unreachable overlap index combination");
}

double closed_published(int n, int m, int np, int mp, const CircuitParams& params,
                       const NormalModes& modes) {
  const auto form = gaussian_coefficients(params, modes, ClosedFormVariant::Published);
  const double phi = modes.phi;
  const double lam = params.lambda;
  const auto w = published_frequencies(params, phi);
  const double k = std::pow(lam * lam * w.mode1_sq * w.mode2_sq, -1.0 / 8.0);
  const double det = form.det();
  const double a11 = form.a11;
  const double a22 = form.a22;
  const double a12 = form.a12;
  const double det32 = std::pow(det, 1.5);

  switch (n * 1000 + m * 100 + np * 10 + mp) {
    case 0:
      return 1.0 / (k * std::sqrt(det));
    case 11:
      return (a12 * (phi * phi - 1.0) - phi * a22 + phi * a11) /
             (std::pow(k * det, 1.5) * std::sqrt(lam));
    case 101:
      return (phi * a12 + a11) / (k * k * k * det32 * std::pow(w.mode1_sq, 0.25));
    case 110:
      return (phi * a11 - a12) / (k * k * k * det32 * std::pow(w.mode2_sq, 0.25));
    case 1001:
      return -std::sqrt(w.mode2_sq) / (k * det32) * (phi * a22 + a12);
    case 1010:
      return std::sqrt(w.mode1_sq) / (k * det32) * (a22 - phi * a12);
    case 1100:
      return -a12 * std::sqrt(lam) / (k * det32);
    case 1111:
      return (1.0 - phi * phi) * (1.0 + 3.0 * a12 * a12 / det) / std::pow(k * det, 1.5);
    default:
      break;
  }
  throw Error(ErrorCode::IndexOutOfRange, "unreachable overlap index combination");
}

// All overlaps with every index below d, by one tensor Gauss-Hermite sweep.
Eigen::MatrixXd quadrature_matrix(const CircuitParams& params, const NormalModes& modes, int d,
                                  int order) {
  if (order < kMinQuadOrder) {
    std::ostringstream msg;
    msg << "overlap quadrature order " << order << " is below " << kMinQuadOrder;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const double lam = params.lambda;
  const Eigen::Matrix2d r = substitution(modes);
  Eigen::Matrix2d a = Eigen::Vector2d(1.0, lam).asDiagonal();
  a += r.transpose() * Eigen::Vector2d(modes.omega1, modes.omega2).asDiagonal() * r;
  a *= 0.5;
  const Eigen::Matrix2d frame = gaussian_frame(a);
  const double jacobian = std::abs(frame.determinant());

  const auto& rule = gauss_hermite_rule(order);
  const std::size_t npts = static_cast<std::size_t>(order) * order;
  std::vector<double> u1(npts), u2(npts), u3(npts), u4(npts), weight(npts);
  const double sl = std::sqrt(lam);
  const double s1 = std::sqrt(modes.omega1);
  const double s2 = std::sqrt(modes.omega2);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const std::size_t p = static_cast<std::size_t>(i) * order + j;
      const Eigen::Vector2d x = frame * Eigen::Vector2d(rule.nodes[i], rule.nodes[j]);
      const Eigen::Vector2d xr = r * x;
      u1[p] = x(0);
      u2[p] = x(1) * sl;
      u3[p] = xr(0) * s1;
      u4[p] = xr(1) * s2;
      weight[p] = rule.scaled_weights[i] * rule.scaled_weights[j];
    }
  }
  // Four 1/sqrt(width) normalizations: widths 1, 1/sqrt(lambda), 1/sqrt(Omega_i).
  const double scale = jacobian * std::sqrt(sl * s1 * s2);

  const auto& k = kernels::active();
  const std::size_t rows = static_cast<std::size_t>(d) * npts;
  std::vector<double> t1(rows), t2(rows), t3(rows), t4(rows);
  k.hermite_functions(u1, d, t1);
  k.hermite_functions(u2, d, t2);
  k.hermite_functions(u3, d, t3);
  k.hermite_functions(u4, d, t4);
  auto row = [npts](std::vector<double>& t, int level) {
    return std::span<double>(t.data() + static_cast<std::size_t>(level) * npts, npts);
  };

  Eigen::MatrixXd out(d * d, d * d);
  std::vector<double> left(npts), partial(npts);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      k.multiply(weight, row(t1, n), left);
      k.multiply(left, row(t2, m), left);
      for (int np = 0; np < d; ++np) {
        k.multiply(left, row(t3, np), partial);
        for (int mp = 0; mp < d; ++mp) {
          out(n * d + m, np * d + mp) = scale * k.dot(partial, row(t4, mp));
        }
      }
    }
  }
  return out;
}

}  // namespace

GaussianQuadraticForm gaussian_coefficients(const CircuitParams& params, const NormalModes& modes,
                                            ClosedFormVariant variant) {
  require_small_angle(modes);
  const double lam = params.lambda;
  const double phi = modes.phi;
  GaussianQuadraticForm form;
  if (variant == ClosedFormVariant::Rederived) {
    const double w1 = modes.omega1;
    const double w2 = modes.omega2;
    form.a11 = 0.5 * (1.0 + w1 + phi * phi * w2);
    form.a22 = 0.5 * (lam + phi * phi * w1 + w2);
    form.a12 = 0.5 * phi * (w1 - w2);
  } else {
    const double g = params.g;
    const double p2 = phi * phi;
    form.a11 = 1.5 + 2.0 * lam * lam * p2 - 2.0 * g * lam * phi + p2 * (p2 + 2.0 * g * lam * phi);
    form.a22 = lam / 2.0 + lam * lam + 2.0 * p2 + 2.0 * g * lam * phi +
               p2 * (lam * lam * p2 - 2.0 * g * lam * phi);
    form.a12 = (lam * lam * p2 + 1.0 - lam * lam - p2 - 4.0 * g * lam * phi) * phi;
  }
  if (!form.positive_definite()) {
    std::ostringstream msg;
    msg << "overlap Gaussian is not positive definite at lambda=" << lam << ", g=" << params.g;
    throw Error(ErrorCode::NotPositiveDefinite, msg.str());
  }
  return form;
}

double overlap_element_closed(int n, int m, int np, int mp, const CircuitParams& params,
                              const NormalModes& modes, ClosedFormVariant variant) {
  for (int idx : {n, m, np, mp}) {
    if (idx < 0 || idx > 1) {
      std::ostringstream msg;
      msg << "closed-form overlap U_" << n << m << np << mp << " needs indices in {0, 1}";
      throw Error(ErrorCode::IndexOutOfRange, msg.str());
    }
  }
  require_small_angle(modes);
  if (parity_odd(n, m, np, mp)) return 0.0;
  if (variant == ClosedFormVariant::Rederived && is_unrotated(params, modes)) {
    return (n == np && m == mp) ? 1.0 : 0.0;
  }
  return variant == ClosedFormVariant::Rederived ? closed_rederived(n, m, np, mp, params, modes)
                                                 : closed_published(n, m, np, mp, params, modes);
}

double overlap_element_quadrature(int n, int m, int np, int mp, const CircuitParams& params,
                                  const NormalModes& modes, int order) {
  if (n < 0 || m < 0 || np < 0 || mp < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "overlap indices must be non-negative");
  }
  const int d = std::max({n, m, np, mp}) + 1;
  const Eigen::MatrixXd u = quadrature_matrix(params, modes, d, order);
  return u(n * d + m, np * d + mp);
}

int resolve_quadrature_order(const CircuitParams& params, const NormalModes& modes,
                             int base_order) {
  int order = base_order;
  double current = quadrature_matrix(params, modes, 1, order)(0, 0);
  while (2 * order <= kMaxQuadOrder) {
    const double refined = quadrature_matrix(params, modes, 1, 2 * order)(0, 0);
    if (std::abs(refined - current) <= 1e-10) break;
    order *= 2;
    current = refined;
  }
  return order;
}

TransformTensor build_transform(const CircuitParams& params, const NormalModes& modes, int d,
                                TransformMethod method, int order) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "transform needs at least 2 levels per mode");
  TransformTensor u;
  u.dim_per_mode = d;
  u.method = method;
  if (method == TransformMethod::ClosedForm) {
    if (d != 2) {
      throw Error(ErrorCode::InvalidArgument, "closed-form transform exists only for d = 2");
    }
    u.entries.resize(4, 4);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        u.entries(row, col) =
            overlap_element_closed(row / 2, row % 2, col / 2, col % 2, params, modes);
      }
    }
    return u;
  }
  u.entries = quadrature_matrix(params, modes, d, resolve_quadrature_order(params, modes, order));
  return u;
}

double orthogonality_defect(const TransformTensor& u, int block) {
  const int d = u.dim_per_mode;
  if (block <= 0 || block > d) block = d;
  std::vector<int> cols;
  for (int n = 0; n < block; ++n)
    for (int m = 0; m < block; ++m) cols.push_back(n * d + m);
  double worst = 0.0;
  for (int a : cols) {
    for (int b : cols) {
      const double gram = u.entries.col(a).dot(u.entries.col(b));
      worst = std::max(worst, std::abs(gram - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace qe
