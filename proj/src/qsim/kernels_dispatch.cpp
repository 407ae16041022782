#include "qkp/qsim/kernels.hpp"

#include <cstdlib>
#include <string>

namespace qkp::qsim {

#if defined(QKP_HAVE_AVX2_TU)
// Lives here, compiled without AVX flags, so probing never executes VEX code.
bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }
#endif

std::vector<const KernelTable*> compiled_kernels() {
  std::vector<const KernelTable*> tables = {&scalar_kernels()};
#if defined(QKP_HAVE_AVX2_TU)
  if (avx2_supported()) tables.push_back(&avx2_kernels());
#endif
#if defined(QKP_HAVE_NEON_TU)
  tables.push_back(&neon_kernels());
#endif
  return tables;
}

namespace {

const KernelTable& pick_kernels() {
  const char* env = std::getenv("QKP_KERNELS");
  const std::string requested = env ? env : "auto";
  if (requested == "scalar") return scalar_kernels();
#if defined(QKP_HAVE_AVX2_TU)
  if (requested == "avx2") return avx2_supported() ? avx2_kernels() : scalar_kernels();
#endif
#if defined(QKP_HAVE_NEON_TU)
  if (requested == "neon") return neon_kernels();
#endif
#if defined(QKP_HAVE_AVX2_TU)
  if (avx2_supported()) return avx2_kernels();
#endif
#if defined(QKP_HAVE_NEON_TU)
  return neon_kernels();
#else
  return scalar_kernels();
#endif
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = pick_kernels();
  return table;
}

}  // namespace qkp::qsim
