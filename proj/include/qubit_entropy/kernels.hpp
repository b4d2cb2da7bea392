#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops of the quadrature engine. Every kernel has a
// scalar reference implementation; wider variants must agree with it to
// rounding (see tests/test_kernels.cpp) and are chosen once at runtime.
namespace qe::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);

struct KernelTable {
  Backend backend;

  /// out[k * n + p] = psi_k(x[p]) for k < levels, n = x.size(), where psi_k
  /// are the unit-width normalized oscillator eigenfunctions.
  void (*hermite_functions)(std::span<const double> x, int levels, std::span<double> out);

  /// out[p] = a[p] * b[p]
  void (*multiply)(std::span<const double> a, std::span<const double> b, std::span<double> out);

  /// sum_p a[p] * b[p]
  double (*dot)(std::span<const double> a, std::span<const double> b);
};

bool available(Backend backend);

/// Table for a specific backend; throws if the CPU cannot run it.
const KernelTable& table(Backend backend);

/// Widest backend the running CPU supports.
const KernelTable& active();

namespace scalar {
void hermite_functions(std::span<const double> x, int levels, std::span<double> out);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(QE_HAVE_AVX2)
namespace avx2 {
void hermite_functions(std::span<const double> x, int levels, std::span<double> out);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

}  // namespace qe::kernels
