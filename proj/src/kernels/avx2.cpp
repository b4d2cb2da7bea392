#include <immintrin.h>

#include <cmath>

#include "qubit_entropy/kernels.hpp"

namespace qe::kernels::avx2 {

void hermite_functions(std::span<const double> x, int levels, std::span<double> out) {
  const std::size_t n = x.size();
  if (levels <= 0) return;
  // No vector exp in AVX2; the Gaussian seed row stays scalar.
  double* row0 = out.data();
  for (std::size_t p = 0; p < n; ++p) row0[p] = 0.75112554446494248286 * std::exp(-0.5 * x[p] * x[p]);
  if (levels == 1) return;

  const std::size_t vec_end = n - n % 4;
  double* row1 = out.data() + n;
  const __m256d sqrt2 = _mm256_set1_pd(std::sqrt(2.0));
  for (std::size_t p = 0; p < vec_end; p += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + p);
    const __m256d r0 = _mm256_loadu_pd(row0 + p);
    _mm256_storeu_pd(row1 + p, _mm256_mul_pd(_mm256_mul_pd(sqrt2, xv), r0));
  }
  for (std::size_t p = vec_end; p < n; ++p) row1[p] = std::sqrt(2.0) * x[p] * row0[p];

  for (int k = 1; k + 1 < levels; ++k) {
    const double a = std::sqrt(2.0 / (k + 1));
    const double b = std::sqrt(double(k) / (k + 1));
    const __m256d av = _mm256_set1_pd(a);
    const __m256d bv = _mm256_set1_pd(b);
    const double* prev = out.data() + (k - 1) * n;
    const double* cur = out.data() + k * n;
    double* next = out.data() + (k + 1) * n;
    for (std::size_t p = 0; p < vec_end; p += 4) {
      const __m256d xv = _mm256_loadu_pd(x.data() + p);
      const __m256d cv = _mm256_loadu_pd(cur + p);
      const __m256d pv = _mm256_loadu_pd(prev + p);
      // a*x*cur - b*prev
      const __m256d ax = _mm256_mul_pd(av, xv);
      _mm256_storeu_pd(next + p, _mm256_fmsub_pd(ax, cv, _mm256_mul_pd(bv, pv)));
    }
    for (std::size_t p = vec_end; p < n; ++p) next[p] = a * x[p] * cur[p] - b * prev[p];
  }
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::size_t n = a.size();
  const std::size_t vec_end = n - n % 4;
  for (std::size_t p = 0; p < vec_end; p += 4) {
    _mm256_storeu_pd(out.data() + p,
                     _mm256_mul_pd(_mm256_loadu_pd(a.data() + p), _mm256_loadu_pd(b.data() + p)));
  }
  for (std::size_t p = vec_end; p < n; ++p) out[p] = a[p] * b[p];
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t vec_end = n - n % 8;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  for (std::size_t p = 0; p < vec_end; p += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + p), _mm256_loadu_pd(b.data() + p), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + p + 4), _mm256_loadu_pd(b.data() + p + 4),
                           acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (std::size_t p = vec_end; p < n; ++p) sum += a[p] * b[p];
  return sum;
}

}  // namespace qe::kernels::avx2
