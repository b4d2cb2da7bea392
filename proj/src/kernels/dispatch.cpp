#include "qubit_entropy/error.hpp"
#include "qubit_entropy/kernels.hpp"

namespace qe::kernels {

namespace {

const KernelTable kScalar{Backend::Scalar, &scalar::hermite_functions, &scalar::multiply,
                          &scalar::dot};
#if defined(QE_HAVE_AVX2)
const KernelTable kAvx2{Backend::Avx2, &avx2::hermite_functions, &avx2::multiply, &avx2::dot};
#endif

bool cpu_has_avx2() {
#if defined(QE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool available(Backend backend) {
  if (backend == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

const KernelTable& table(Backend backend) {
  if (!available(backend)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("kernel backend ") + std::string(to_string(backend)) +
                    " is not supported on this CPU");
  }
#if defined(QE_HAVE_AVX2)
  if (backend == Backend::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen =
      available(Backend::Avx2) ? table(Backend::Avx2) : table(Backend::Scalar);
  return chosen;
}

}  // namespace qe::kernels
