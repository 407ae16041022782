#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qkp::qsim {

using c64 = std::complex<double>;

// Hot loops over amplitude arrays. Matrices are row-major; the two-qubit
// local basis index is l = bit(q0) + 2*bit(q1), i.e. amplitude leg
// base + (l&1 ? 1<<q0 : 0) + (l&2 ? 1<<q1 : 0).
struct KernelTable {
  const char* name;
  void (*apply_1q)(c64* amps, std::size_t size, int qubit, const c64* m /*[4]*/);
  void (*apply_2q)(c64* amps, std::size_t size, int q0, int q1, const c64* m /*[16]*/);
  void (*apply_phase_bit)(c64* amps, std::size_t size, int qubit, c64 phase);
  double (*expectation)(const c64* amps, std::size_t size, const double* f);
  void (*probabilities)(const c64* amps, std::size_t size, double* out);
};

const KernelTable& scalar_kernels();

#if defined(QKP_HAVE_AVX2_TU)
const KernelTable& avx2_kernels();
bool avx2_supported();
#endif
#if defined(QKP_HAVE_NEON_TU)
const KernelTable& neon_kernels();
#endif

// Every table compiled into this binary, scalar first. For equivalence tests.
std::vector<const KernelTable*> compiled_kernels();

// Runtime selection. The environment variable QKP_KERNELS forces a variant
// ("scalar", "avx2", "neon"); anything else, or an unavailable variant,
// falls back to auto-detection and ultimately to scalar.
const KernelTable& active_kernels();

}  // namespace qkp::qsim
