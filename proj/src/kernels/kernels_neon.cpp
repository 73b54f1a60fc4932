#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "nmt/kernels.hpp"

namespace nmt::kernels {

namespace {

void add_neon(const double* a, const double* b, double* out, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_neon(const double* a, const double* b, double* out, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_neon(const double* a, const double* b, double* out, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_neon(double alpha, const double* x, double* y, size_t n) {
  float64x2_t va = vdupq_n_f64(alpha);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double alpha, double* x, size_t n) {
  float64x2_t va = vdupq_n_f64(alpha);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

double dot_neon(const double* a, const double* b, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_neon(const double* x, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sumsq_neon(const double* x, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double maxval_neon(const double* x, size_t n) {
  double m = x[0];
  size_t i = 1;
  if (n >= 3) {
    float64x2_t acc = vld1q_f64(x);
    i = 2;
    for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vld1q_f64(x + i));
    m = vmaxvq_f64(acc);
  }
  for (; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

inline void row_fma(double av, const double* brow, double* crow, size_t n) {
  float64x2_t va = vdupq_n_f64(av);
  size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    vst1q_f64(crow + j, vfmaq_f64(vld1q_f64(crow + j), va, vld1q_f64(brow + j)));
  }
  for (; j < n; ++j) crow[j] += av * brow[j];
}

void gemm_neon(bool ta, bool tb, size_t m, size_t n, size_t k, const double* a,
               const double* b, double* c, bool accumulate) {
  if (!accumulate) {
    for (size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  }
  if (!ta && !tb) {
    for (size_t i = 0; i < m; ++i) {
      for (size_t l = 0; l < k; ++l) {
        row_fma(a[i * k + l], b + l * n, c + i * n, n);
      }
    }
  } else if (!ta && tb) {
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) {
        c[i * n + j] += dot_neon(a + i * k, b + j * k, k);
      }
    }
  } else if (ta && !tb) {
    for (size_t l = 0; l < k; ++l) {
      const double* brow = b + l * n;
      for (size_t i = 0; i < m; ++i) {
        row_fma(a[l * m + i], brow, c + i * n, n);
      }
    }
  } else {
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (size_t l = 0; l < k; ++l) s += a[l * m + i] * b[j * k + l];
        c[i * n + j] += s;
      }
    }
  }
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k = {
      "neon",     add_neon, sub_neon,   mul_neon,    axpy_neon, scale_neon,
      dot_neon,   sum_neon, sumsq_neon, maxval_neon, gemm_neon,
  };
  return &k;
}

}  // namespace nmt::kernels

#endif  // aarch64
