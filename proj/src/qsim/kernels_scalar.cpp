#include "qkp/qsim/kernels.hpp"

namespace qkp::qsim {

namespace {

void s_apply_1q(c64* a, std::size_t size, int q, const c64* m) {
  const std::size_t s = std::size_t{1} << q;
  for (std::size_t base = 0; base < size; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      const c64 x0 = a[i];
      const c64 x1 = a[i + s];
      a[i] = m[0] * x0 + m[1] * x1;
      a[i + s] = m[2] * x0 + m[3] * x1;
    }
  }
}

void s_apply_2q(c64* a, std::size_t size, int q0, int q1, const c64* m) {
  const std::size_t s0 = std::size_t{1} << q0;
  const std::size_t s1 = std::size_t{1} << q1;
  const std::size_t sa = s0 < s1 ? s0 : s1;
  const std::size_t sb = s0 < s1 ? s1 : s0;
  for (std::size_t hi = 0; hi < size; hi += 2 * sb) {
    for (std::size_t mid = hi; mid < hi + sb; mid += 2 * sa) {
      for (std::size_t lo = mid; lo < mid + sa; ++lo) {
        c64 in[4];
        in[0] = a[lo];
        in[1] = a[lo + s0];
        in[2] = a[lo + s1];
        in[3] = a[lo + s0 + s1];
        c64 out[4];
        for (int l = 0; l < 4; ++l)
          out[l] = m[l * 4 + 0] * in[0] + m[l * 4 + 1] * in[1] + m[l * 4 + 2] * in[2] +
                   m[l * 4 + 3] * in[3];
        a[lo] = out[0];
        a[lo + s0] = out[1];
        a[lo + s1] = out[2];
        a[lo + s0 + s1] = out[3];
      }
    }
  }
}

void s_apply_phase_bit(c64* a, std::size_t size, int q, c64 phase) {
  const std::size_t s = std::size_t{1} << q;
  for (std::size_t base = s; base < size; base += 2 * s)
    for (std::size_t i = base; i < base + s; ++i) a[i] *= phase;
}

double s_expectation(const c64* a, std::size_t size, const double* f) {
  double total = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double re = a[i].real();
    const double im = a[i].imag();
    total += (re * re + im * im) * f[i];
  }
  return total;
}

void s_probabilities(const c64* a, std::size_t size, double* out) {
  for (std::size_t i = 0; i < size; ++i) {
    const double re = a[i].real();
    const double im = a[i].imag();
    out[i] = re * re + im * im;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table = {"scalar", &s_apply_1q, &s_apply_2q, &s_apply_phase_bit,
                                    &s_expectation, &s_probabilities};
  return table;
}

}  // namespace qkp::qsim
