#include <array>
#include <cmath>

#include "doctest.h"
#include "qubit_entropy/error.hpp"
#include "qubit_entropy/transform.hpp"
#include "test_support.hpp"

using namespace qe;

namespace {

CircuitParams make(double lambda, double g) {
  CircuitParams p;
  p.lambda = lambda;
  p.g = g;
  return p;
}

NormalModes small(const CircuitParams& p) { return normal_modes(p, ModeMethod::SmallAngle); }

using Index = std::array<int, 4>;

constexpr std::array<Index, 8> kOddIndices{{{0, 0, 0, 1},
                                            {0, 0, 1, 0},
                                            {0, 1, 0, 0},
                                            {1, 0, 0, 0},
                                            {0, 1, 1, 1},
                                            {1, 0, 1, 1},
                                            {1, 1, 1, 0},
                                            {1, 1, 0, 1}}};

// Frozen measured bound on max |U^T U - I| at d = 2 over g <= 0.1, lambda in [1.2, 2].
constexpr double kTruncationBound = 0.33;

}  // namespace

TEST_CASE("gaussian coefficients") {
  const auto sep = gaussian_coefficients(make(1.0, 0.0), NormalModes{0.0, 1.0, 1.0, ModeMethod::SmallAngle, {}});
  CHECK(sep.a12 == 0.0);
  CHECK(sep.a11 == 1.0);
  CHECK(sep.a22 == 1.0);

  const auto p = make(1.5, 0.1);
  const auto modes = small(p);
  const auto f = gaussian_coefficients(p, modes);
  CHECK(f.positive_definite());
  CHECK(f.a12 == doctest::Approx(0.12 * (modes.omega1 - modes.omega2) / 2).epsilon(1e-15));

  const double phi = 0.12;
  const double lam = 1.5;
  const double published = (lam * lam * phi * phi + 1 - lam * lam - phi * phi - 4 * 0.1 * lam * phi) * phi;
  const auto published_form = gaussian_coefficients(p, modes, ClosedFormVariant::Published);
  CHECK(published_form.a12 == doctest::Approx(published).epsilon(1e-14));
  CHECK(published_form.a12 == doctest::Approx(-0.15648).epsilon(1e-12));

  // Quadrature of the U_0000 integrand arbitrates between the two forms.
  const double quad = overlap_element_quadrature(0, 0, 0, 0, p, modes);
  const double rederived = overlap_element_closed(0, 0, 0, 0, p, modes);
  const double published_u = overlap_element_closed(0, 0, 0, 0, p, modes, ClosedFormVariant::Published);
  CHECK(std::abs(quad - rederived) <= 1e-10);
  CHECK(std::abs(quad - published_u) > 0.1);

  CHECK_THROWS_AS(gaussian_coefficients(p, normal_modes(p, ModeMethod::Exact)), Error);
}

TEST_CASE("closed forms at zero coupling are the identity") {
  const auto p = make(1.5, 0.0);
  const auto modes = small(p);
  for (int n = 0; n < 2; ++n)
    for (int m = 0; m < 2; ++m)
      for (int np = 0; np < 2; ++np)
        for (int mp = 0; mp < 2; ++mp) {
          const double expected = (n == np && m == mp) ? 1.0 : 0.0;
          CHECK(overlap_element_closed(n, m, np, mp, p, modes) == expected);
          CHECK(std::abs(overlap_element_quadrature(n, m, np, mp, p, modes) - expected) <= 1e-12);
        }
}

TEST_CASE("build_transform at zero coupling") {
  for (double lam : {1.2, 1.5, 2.0}) {
    const auto p = make(lam, 0.0);
    const auto modes = small(p);
    const auto closed = build_transform(p, modes, 2, TransformMethod::ClosedForm);
    CHECK(closed.entries == Eigen::MatrixXd::Identity(4, 4));
    CHECK(closed.method == TransformMethod::ClosedForm);
    const auto quad = build_transform(p, modes, 2, TransformMethod::Quadrature);
    CHECK((quad.entries - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
    const auto big = build_transform(p, modes, 5, TransformMethod::Quadrature);
    CHECK((big.entries - Eigen::MatrixXd::Identity(25, 25)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("frozen overlaps at lambda = 1.5, g = 0.1") {
  const auto p = make(1.5, 0.1);
  const auto modes = small(p);
  const auto f = gaussian_coefficients(p, modes);
  const double k = std::pow(p.lambda * modes.omega1 * modes.omega2, -0.25);

  const double u1100 = overlap_element_closed(1, 1, 0, 0, p, modes);
  CHECK(u1100 == doctest::Approx(-f.a12 * std::sqrt(1.5) / (k * std::pow(f.det(), 1.5))).epsilon(1e-13));
  CHECK(std::abs(u1100 - overlap_element_quadrature(1, 1, 0, 0, p, modes)) <= 1e-8);

  const double u1111 = overlap_element_closed(1, 1, 1, 1, p, modes);
  CHECK(std::abs(u1111 - overlap_element_quadrature(1, 1, 1, 1, p, modes)) <= 1e-8);
  CHECK(u1111 == doctest::Approx(0.961871075976).epsilon(1e-11));

  const auto u = build_transform(p, modes, 2, TransformMethod::ClosedForm);
  const double expected[4][4] = {{0.99252429, 0, 0, -0.02394964},
                                 {0, 0.98477389, 0.12092306, 0},
                                 {0, -0.12045899, 0.98483393, 0},
                                 {0.02472130, 0, 0, 0.96187108}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(u.entries(r, c) == doctest::Approx(expected[r][c]).epsilon(1e-8).scale(1.0));
}

TEST_CASE("closed form and quadrature agree on random draws") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test::random_params(0.1);
    const auto modes = small(p);
    const auto closed = build_transform(p, modes, 2, TransformMethod::ClosedForm);
    const auto quad = build_transform(p, modes, 2, TransformMethod::Quadrature);
    CHECK((closed.entries - quad.entries).cwiseAbs().maxCoeff() <= 1e-8);
    for (const auto& idx : kOddIndices) {
      CHECK(closed.at(idx[0], idx[1], idx[2], idx[3]) == 0.0);
      CHECK(std::abs(quad.at(idx[0], idx[1], idx[2], idx[3])) <= 1e-12);
      CHECK(overlap_element_closed(idx[0], idx[1], idx[2], idx[3], p, modes) == 0.0);
    }
    CHECK(orthogonality_defect(closed) <= kTruncationBound);
  }
}

TEST_CASE("truncation defect at d = 2 stays under the frozen bound") {
  for (double lam = 1.2; lam <= 2.0 + 1e-12; lam += 0.05) {
    for (double g = 0.0; g <= 0.1 + 1e-12; g += 0.01) {
      const auto p = make(lam, g);
      const auto u = build_transform(p, small(p), 2, TransformMethod::ClosedForm);
      CHECK(orthogonality_defect(u) <= kTruncationBound);
    }
  }
}

TEST_CASE("orthogonality defect decreases with the truncation") {
  for (double lam : {1.2, 1.5, 2.0}) {
    const auto p = make(lam, 0.1);
    const auto modes = small(p);
    double previous = INFINITY;
    for (int d : {2, 4, 6}) {
      const double defect = orthogonality_defect(build_transform(p, modes, d, TransformMethod::Quadrature), 2);
      CHECK(defect < previous);
      previous = defect;
    }
  }

  // With the exact rotation the lowest block becomes orthonormal.
  const auto p = make(1.5, 0.1);
  const auto exact = normal_modes(p, ModeMethod::Exact);
  double previous = INFINITY;
  for (int d : {2, 4, 6, 8}) {
    const double defect = orthogonality_defect(build_transform(p, exact, d, TransformMethod::Quadrature), 2);
    CHECK(defect < previous);
    previous = defect;
  }
  CHECK(previous <= 1e-12);
}

TEST_CASE("entries are continuous in g") {
  for (double g : {0.0, 0.03, 0.1}) {
    const auto a = make(1.5, g);
    const auto b = make(1.5, g + 1e-6);
    for (auto method : {TransformMethod::ClosedForm, TransformMethod::Quadrature}) {
      const auto ua = build_transform(a, small(a), 2, method);
      const auto ub = build_transform(b, small(b), 2, method);
      CHECK((ua.entries - ub.entries).cwiseAbs().maxCoeff() <= 1e-4);
    }
  }
}

TEST_CASE("quadrature order resolution") {
  const auto p = make(1.5, 0.1);
  const auto modes = small(p);
  const int order = resolve_quadrature_order(p, modes, 16);
  CHECK(order >= 16);
  CHECK(order <= kMaxQuadOrder);
  CHECK(std::abs(overlap_element_quadrature(0, 0, 0, 0, p, modes, order) -
                 overlap_element_quadrature(0, 0, 0, 0, p, modes, 2 * order)) <= 1e-10);
  CHECK(resolve_quadrature_order(p, modes) == kDefaultQuadOrder);
}

TEST_CASE("transform errors") {
  const auto p = make(1.5, 0.1);
  const auto modes = small(p);
  try {
    overlap_element_closed(2, 0, 0, 0, p, modes);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK_THROWS_AS(overlap_element_closed(0, -1, 0, 0, p, modes), Error);
  CHECK_THROWS_AS(build_transform(p, modes, 3, TransformMethod::ClosedForm), Error);
  CHECK_THROWS_AS(build_transform(p, modes, 1, TransformMethod::Quadrature), Error);
  CHECK_THROWS_AS(overlap_element_quadrature(0, 0, 0, 0, p, modes, 8), Error);
}
