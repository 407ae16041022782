#include "qkp/qsim/kernels.hpp"

#include <immintrin.h>

// Two complex doubles per __m256d. Gate strides below a vector width are
// handled by gathering two butterfly groups and transposing 128-bit lanes in
// registers, so every qubit position takes the vector path.

namespace qkp::qsim {

namespace {

inline __m256d cmul(__m256d v, __m256d cre, __m256d cim) {
  // (a+bi)(c+di) = (ac-bd) + (bc+ad)i ; even lanes subtract, odd lanes add
  const __m256d swapped = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(v, cre, _mm256_mul_pd(swapped, cim));
}

inline double* pd(c64* a) { return reinterpret_cast<double*>(a); }
inline const double* pd(const c64* a) { return reinterpret_cast<const double*>(a); }

void v_apply_1q(c64* amps, std::size_t size, int q, const c64* m) {
  double* a = pd(amps);
  const __m256d m00re = _mm256_set1_pd(m[0].real()), m00im = _mm256_set1_pd(m[0].imag());
  const __m256d m01re = _mm256_set1_pd(m[1].real()), m01im = _mm256_set1_pd(m[1].imag());
  const __m256d m10re = _mm256_set1_pd(m[2].real()), m10im = _mm256_set1_pd(m[2].imag());
  const __m256d m11re = _mm256_set1_pd(m[3].real()), m11im = _mm256_set1_pd(m[3].imag());
  const std::size_t s = std::size_t{1} << q;

  if (q >= 1) {
    for (std::size_t base = 0; base < size; base += 2 * s) {
      for (std::size_t i = base; i < base + s; i += 2) {
        const __m256d x0 = _mm256_loadu_pd(a + 2 * i);
        const __m256d x1 = _mm256_loadu_pd(a + 2 * (i + s));
        const __m256d r0 = _mm256_add_pd(cmul(x0, m00re, m00im), cmul(x1, m01re, m01im));
        const __m256d r1 = _mm256_add_pd(cmul(x0, m10re, m10im), cmul(x1, m11re, m11im));
        _mm256_storeu_pd(a + 2 * i, r0);
        _mm256_storeu_pd(a + 2 * (i + s), r1);
      }
    }
    return;
  }

  if (size < 4) {
    scalar_kernels().apply_1q(amps, size, q, m);
    return;
  }
  // qubit 0: butterfly partners are adjacent; transpose two pairs across lanes
  for (std::size_t i = 0; i < size; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(a + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(a + 2 * i + 4);
    const __m256d x0 = _mm256_permute2f128_pd(v0, v1, 0x20);
    const __m256d x1 = _mm256_permute2f128_pd(v0, v1, 0x31);
    const __m256d r0 = _mm256_add_pd(cmul(x0, m00re, m00im), cmul(x1, m01re, m01im));
    const __m256d r1 = _mm256_add_pd(cmul(x0, m10re, m10im), cmul(x1, m11re, m11im));
    _mm256_storeu_pd(a + 2 * i, _mm256_permute2f128_pd(r0, r1, 0x20));
    _mm256_storeu_pd(a + 2 * i + 4, _mm256_permute2f128_pd(r0, r1, 0x31));
  }
}

struct Mat4Bcast {
  __m256d re[16];
  __m256d im[16];

  explicit Mat4Bcast(const c64* m) {
    for (int i = 0; i < 16; ++i) {
      re[i] = _mm256_set1_pd(m[i].real());
      im[i] = _mm256_set1_pd(m[i].imag());
    }
  }
};

// v[l] holds leg l of two groups; applies the 4x4 in place
inline void mat4_apply(__m256d v[4], const Mat4Bcast& m) {
  __m256d out[4];
  for (int l = 0; l < 4; ++l) {
    __m256d acc = cmul(v[0], m.re[l * 4 + 0], m.im[l * 4 + 0]);
    acc = _mm256_add_pd(acc, cmul(v[1], m.re[l * 4 + 1], m.im[l * 4 + 1]));
    acc = _mm256_add_pd(acc, cmul(v[2], m.re[l * 4 + 2], m.im[l * 4 + 2]));
    acc = _mm256_add_pd(acc, cmul(v[3], m.re[l * 4 + 3], m.im[l * 4 + 3]));
    out[l] = acc;
  }
  for (int l = 0; l < 4; ++l) v[l] = out[l];
}

void v_apply_2q(c64* amps, std::size_t size, int q0, int q1, const c64* m) {
  // canonicalize to q0 < q1 by conjugating the matrix with the bit swap
  c64 swapped[16];
  if (q0 > q1) {
    auto p = [](int l) { return ((l & 1) << 1) | ((l >> 1) & 1); };
    for (int l = 0; l < 4; ++l)
      for (int k = 0; k < 4; ++k) swapped[l * 4 + k] = m[p(l) * 4 + p(k)];
    m = swapped;
    const int t = q0;
    q0 = q1;
    q1 = t;
  }

  const std::size_t s0 = std::size_t{1} << q0;
  const std::size_t s1 = std::size_t{1} << q1;
  double* a = pd(amps);
  const Mat4Bcast mb(m);
  __m256d v[4];

  if (q0 >= 1) {
    for (std::size_t hi = 0; hi < size; hi += 2 * s1) {
      for (std::size_t mid = hi; mid < hi + s1; mid += 2 * s0) {
        for (std::size_t lo = mid; lo < mid + s0; lo += 2) {
          v[0] = _mm256_loadu_pd(a + 2 * lo);
          v[1] = _mm256_loadu_pd(a + 2 * (lo + s0));
          v[2] = _mm256_loadu_pd(a + 2 * (lo + s1));
          v[3] = _mm256_loadu_pd(a + 2 * (lo + s0 + s1));
          mat4_apply(v, mb);
          _mm256_storeu_pd(a + 2 * lo, v[0]);
          _mm256_storeu_pd(a + 2 * (lo + s0), v[1]);
          _mm256_storeu_pd(a + 2 * (lo + s1), v[2]);
          _mm256_storeu_pd(a + 2 * (lo + s0 + s1), v[3]);
        }
      }
    }
    return;
  }

  if (q1 >= 2) {
    // q0 = 0: legs 0/1 and 2/3 are adjacent; two groups sit 2 apart
    for (std::size_t hi = 0; hi < size; hi += 2 * s1) {
      for (std::size_t lo = hi; lo < hi + s1; lo += 4) {
        const __m256d u0 = _mm256_loadu_pd(a + 2 * lo);
        const __m256d u1 = _mm256_loadu_pd(a + 2 * lo + 4);
        const __m256d u2 = _mm256_loadu_pd(a + 2 * (lo + s1));
        const __m256d u3 = _mm256_loadu_pd(a + 2 * (lo + s1) + 4);
        v[0] = _mm256_permute2f128_pd(u0, u1, 0x20);
        v[1] = _mm256_permute2f128_pd(u0, u1, 0x31);
        v[2] = _mm256_permute2f128_pd(u2, u3, 0x20);
        v[3] = _mm256_permute2f128_pd(u2, u3, 0x31);
        mat4_apply(v, mb);
        _mm256_storeu_pd(a + 2 * lo, _mm256_permute2f128_pd(v[0], v[1], 0x20));
        _mm256_storeu_pd(a + 2 * lo + 4, _mm256_permute2f128_pd(v[0], v[1], 0x31));
        _mm256_storeu_pd(a + 2 * (lo + s1), _mm256_permute2f128_pd(v[2], v[3], 0x20));
        _mm256_storeu_pd(a + 2 * (lo + s1) + 4, _mm256_permute2f128_pd(v[2], v[3], 0x31));
      }
    }
    return;
  }

  if (size < 8) {
    scalar_kernels().apply_2q(amps, size, q0, q1, m);
    return;
  }
  // q0 = 0, q1 = 1: each group is one contiguous quad
  for (std::size_t lo = 0; lo < size; lo += 8) {
    const __m256d u0 = _mm256_loadu_pd(a + 2 * lo);       // A0 A1
    const __m256d u1 = _mm256_loadu_pd(a + 2 * lo + 4);   // A2 A3
    const __m256d u2 = _mm256_loadu_pd(a + 2 * lo + 8);   // B0 B1
    const __m256d u3 = _mm256_loadu_pd(a + 2 * lo + 12);  // B2 B3
    v[0] = _mm256_permute2f128_pd(u0, u2, 0x20);
    v[1] = _mm256_permute2f128_pd(u0, u2, 0x31);
    v[2] = _mm256_permute2f128_pd(u1, u3, 0x20);
    v[3] = _mm256_permute2f128_pd(u1, u3, 0x31);
    mat4_apply(v, mb);
    _mm256_storeu_pd(a + 2 * lo, _mm256_permute2f128_pd(v[0], v[1], 0x20));
    _mm256_storeu_pd(a + 2 * lo + 4, _mm256_permute2f128_pd(v[2], v[3], 0x20));
    _mm256_storeu_pd(a + 2 * lo + 8, _mm256_permute2f128_pd(v[0], v[1], 0x31));
    _mm256_storeu_pd(a + 2 * lo + 12, _mm256_permute2f128_pd(v[2], v[3], 0x31));
  }
}

void v_apply_phase_bit(c64* amps, std::size_t size, int q, c64 phase) {
  double* a = pd(amps);
  const std::size_t s = std::size_t{1} << q;
  if (q >= 1) {
    const __m256d cre = _mm256_set1_pd(phase.real());
    const __m256d cim = _mm256_set1_pd(phase.imag());
    for (std::size_t base = s; base < size; base += 2 * s)
      for (std::size_t i = base; i < base + s; i += 2)
        _mm256_storeu_pd(a + 2 * i, cmul(_mm256_loadu_pd(a + 2 * i), cre, cim));
    return;
  }
  // qubit 0: scale the odd complex of each adjacent pair, identity on the even
  const __m256d cre = _mm256_setr_pd(1.0, 1.0, phase.real(), phase.real());
  const __m256d cim = _mm256_setr_pd(0.0, 0.0, phase.imag(), phase.imag());
  for (std::size_t i = 0; i < size; i += 2)
    _mm256_storeu_pd(a + 2 * i, cmul(_mm256_loadu_pd(a + 2 * i), cre, cim));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double v_expectation(const c64* amps, std::size_t size, const double* f) {
  if (size < 4) return scalar_kernels().expectation(amps, size, f);
  const double* a = pd(amps);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < size; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(a + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(a + 2 * i + 4);
    // |a|^2 of four amplitudes, lanes ordered (0, 2, 1, 3)
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    const __m256d fv = _mm256_loadu_pd(f + i);
    acc = _mm256_fmadd_pd(h, _mm256_permute4x64_pd(fv, 0xD8), acc);
  }
  return hsum(acc);
}

void v_probabilities(const c64* amps, std::size_t size, double* out) {
  if (size < 4) {
    scalar_kernels().probabilities(amps, size, out);
    return;
  }
  const double* a = pd(amps);
  for (std::size_t i = 0; i < size; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(a + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(a + 2 * i + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table = {"avx2", &v_apply_1q, &v_apply_2q, &v_apply_phase_bit,
                                    &v_expectation, &v_probabilities};
  return table;
}

}  // namespace qkp::qsim
