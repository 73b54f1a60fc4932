#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nmt::kernels {

// Dense f64 primitives behind the tensor ops. Every entry has a scalar
// reference implementation; SIMD lanes (AVX2 on x86-64, NEON on aarch64) are
// selected at runtime when the CPU supports them. NMT_KERNELS=ref|avx2|neon
// overrides the selection.
struct Kernels {
  const char* name;

  void (*add)(const double* a, const double* b, double* out, size_t n);
  void (*sub)(const double* a, const double* b, double* out, size_t n);
  void (*mul)(const double* a, const double* b, double* out, size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, size_t n);
  void (*scale)(double alpha, double* x, size_t n);
  double (*dot)(const double* a, const double* b, size_t n);
  double (*sum)(const double* x, size_t n);
  double (*sumsq)(const double* x, size_t n);
  double (*maxval)(const double* x, size_t n);

  // C[m,n] (+)= op(A)[m,k] * op(B)[k,n], row-major, ta/tb transpose the
  // physical layouts A[k,m] / B[n,k].
  void (*gemm)(bool ta, bool tb, size_t m, size_t n, size_t k, const double* a,
               const double* b, double* c, bool accumulate);
};

const Kernels& ref();
const Kernels& active();

// Returns false if the lane is unknown or unsupported on this CPU.
bool select(const std::string& name);

std::vector<const Kernels*> available();

}  // namespace nmt::kernels
