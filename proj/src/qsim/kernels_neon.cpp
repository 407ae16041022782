#include "qkp/qsim/kernels.hpp"

#include <arm_neon.h>

// One complex double per float64x2_t; strides never matter since the vector
// width equals one amplitude.

namespace qkp::qsim {

namespace {

struct CK {
  float64x2_t re;   // [cr, cr]
  float64x2_t imn;  // [-ci, ci]

  explicit CK(c64 c) {
    re = vdupq_n_f64(c.real());
    const double ci = c.imag();
    imn = vsetq_lane_f64(ci, vdupq_n_f64(-ci), 1);
  }
};

inline float64x2_t cmul(float64x2_t v, const CK& c) {
  return vfmaq_f64(vmulq_f64(v, c.re), vextq_f64(v, v, 1), c.imn);
}

inline double* pd(c64* a) { return reinterpret_cast<double*>(a); }
inline const double* pd(const c64* a) { return reinterpret_cast<const double*>(a); }

void n_apply_1q(c64* amps, std::size_t size, int q, const c64* m) {
  double* a = pd(amps);
  const CK m00(m[0]), m01(m[1]), m10(m[2]), m11(m[3]);
  const std::size_t s = std::size_t{1} << q;
  for (std::size_t base = 0; base < size; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      const float64x2_t x0 = vld1q_f64(a + 2 * i);
      const float64x2_t x1 = vld1q_f64(a + 2 * (i + s));
      vst1q_f64(a + 2 * i, vaddq_f64(cmul(x0, m00), cmul(x1, m01)));
      vst1q_f64(a + 2 * (i + s), vaddq_f64(cmul(x0, m10), cmul(x1, m11)));
    }
  }
}

void n_apply_2q(c64* amps, std::size_t size, int q0, int q1, const c64* m) {
  double* a = pd(amps);
  CK mb[16] = {CK(m[0]),  CK(m[1]),  CK(m[2]),  CK(m[3]), CK(m[4]),  CK(m[5]),
               CK(m[6]),  CK(m[7]),  CK(m[8]),  CK(m[9]), CK(m[10]), CK(m[11]),
               CK(m[12]), CK(m[13]), CK(m[14]), CK(m[15])};
  const std::size_t s0 = std::size_t{1} << q0;
  const std::size_t s1 = std::size_t{1} << q1;
  const std::size_t sa = s0 < s1 ? s0 : s1;
  const std::size_t sb = s0 < s1 ? s1 : s0;
  for (std::size_t hi = 0; hi < size; hi += 2 * sb) {
    for (std::size_t mid = hi; mid < hi + sb; mid += 2 * sa) {
      for (std::size_t lo = mid; lo < mid + sa; ++lo) {
        float64x2_t in[4];
        in[0] = vld1q_f64(a + 2 * lo);
        in[1] = vld1q_f64(a + 2 * (lo + s0));
        in[2] = vld1q_f64(a + 2 * (lo + s1));
        in[3] = vld1q_f64(a + 2 * (lo + s0 + s1));
        float64x2_t out[4];
        for (int l = 0; l < 4; ++l) {
          float64x2_t acc = cmul(in[0], mb[l * 4]);
          acc = vaddq_f64(acc, cmul(in[1], mb[l * 4 + 1]));
          acc = vaddq_f64(acc, cmul(in[2], mb[l * 4 + 2]));
          acc = vaddq_f64(acc, cmul(in[3], mb[l * 4 + 3]));
          out[l] = acc;
        }
        vst1q_f64(a + 2 * lo, out[0]);
        vst1q_f64(a + 2 * (lo + s0), out[1]);
        vst1q_f64(a + 2 * (lo + s1), out[2]);
        vst1q_f64(a + 2 * (lo + s0 + s1), out[3]);
      }
    }
  }
}

void n_apply_phase_bit(c64* amps, std::size_t size, int q, c64 phase) {
  double* a = pd(amps);
  const CK c(phase);
  const std::size_t s = std::size_t{1} << q;
  for (std::size_t base = s; base < size; base += 2 * s)
    for (std::size_t i = base; i < base + s; ++i)
      vst1q_f64(a + 2 * i, cmul(vld1q_f64(a + 2 * i), c));
}

double n_expectation(const c64* amps, std::size_t size, const double* f) {
  const double* a = pd(amps);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < size; i += 2) {
    const float64x2_t v0 = vld1q_f64(a + 2 * i);
    const float64x2_t v1 = vld1q_f64(a + 2 * i + 2);
    const float64x2_t p = vpaddq_f64(vmulq_f64(v0, v0), vmulq_f64(v1, v1));
    acc = vfmaq_f64(acc, p, vld1q_f64(f + i));
  }
  return vaddvq_f64(acc);
}

void n_probabilities(const c64* amps, std::size_t size, double* out) {
  const double* a = pd(amps);
  for (std::size_t i = 0; i < size; i += 2) {
    const float64x2_t v0 = vld1q_f64(a + 2 * i);
    const float64x2_t v1 = vld1q_f64(a + 2 * i + 2);
    vst1q_f64(out + i, vpaddq_f64(vmulq_f64(v0, v0), vmulq_f64(v1, v1)));
  }
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table = {"neon", &n_apply_1q, &n_apply_2q, &n_apply_phase_bit,
                                    &n_expectation, &n_probabilities};
  return table;
}

}  // namespace qkp::qsim
