#include <cmath>

#include "qubit_entropy/kernels.hpp"

namespace qe::kernels::scalar {

void hermite_functions(std::span<const double> x, int levels, std::span<double> out) {
  const std::size_t n = x.size();
  if (levels <= 0) return;
  double* row0 = out.data();
  for (std::size_t p = 0; p < n; ++p) row0[p] = 0.75112554446494248286 * std::exp(-0.5 * x[p] * x[p]);
  if (levels == 1) return;
  double* row1 = out.data() + n;
  for (std::size_t p = 0; p < n; ++p) row1[p] = std::sqrt(2.0) * x[p] * row0[p];
  for (int k = 1; k + 1 < levels; ++k) {
    const double a = std::sqrt(2.0 / (k + 1));
    const double b = std::sqrt(double(k) / (k + 1));
    const double* prev = out.data() + (k - 1) * n;
    const double* cur = out.data() + k * n;
    double* next = out.data() + (k + 1) * n;
    for (std::size_t p = 0; p < n; ++p) next[p] = a * x[p] * cur[p] - b * prev[p];
  }
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[p] * b[p];
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) sum += a[p] * b[p];
  return sum;
}

}  // namespace qe::kernels::scalar
