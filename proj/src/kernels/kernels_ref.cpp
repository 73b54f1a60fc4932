#include <cstddef>

#include "nmt/kernels.hpp"

namespace nmt::kernels {

namespace {

void add_ref(const double* a, const double* b, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_ref(const double* a, const double* b, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_ref(const double* a, const double* b, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_ref(double alpha, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_ref(double alpha, double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double dot_ref(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_ref(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double sumsq_ref(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double maxval_ref(const double* x, size_t n) {
  double m = x[0];
  for (size_t i = 1; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

void gemm_ref(bool ta, bool tb, size_t m, size_t n, size_t k, const double* a,
              const double* b, double* c, bool accumulate) {
  if (!accumulate) {
    for (size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  }
  if (!ta && !tb) {
    // C[i,:] += A[i,l] * B[l,:]
    for (size_t i = 0; i < m; ++i) {
      for (size_t l = 0; l < k; ++l) {
        double av = a[i * k + l];
        const double* brow = b + l * n;
        double* crow = c + i * n;
        for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
    }
  } else if (!ta && tb) {
    // C[i,j] += dot(A[i,:], B[j,:]), B physical [n,k]
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) {
        c[i * n + j] += dot_ref(a + i * k, b + j * k, k);
      }
    }
  } else if (ta && !tb) {
    // A physical [k,m]: C[i,:] += A[l,i] * B[l,:]
    for (size_t l = 0; l < k; ++l) {
      const double* brow = b + l * n;
      for (size_t i = 0; i < m; ++i) {
        double av = a[l * m + i];
        double* crow = c + i * n;
        for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
    }
  } else {
    // A physical [k,m], B physical [n,k]
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

const Kernels& ref() {
  static const Kernels k = {
      "ref",     add_ref, sub_ref,   mul_ref,    axpy_ref, scale_ref,
      dot_ref,   sum_ref, sumsq_ref, maxval_ref, gemm_ref,
  };
  return k;
}

}  // namespace nmt::kernels
