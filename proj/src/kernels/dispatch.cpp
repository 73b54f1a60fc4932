#include <cstdlib>
#include <cstring>

#include "nmt/common.hpp"
#include "nmt/kernels.hpp"

namespace nmt::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Kernels* avx2_kernels();
#endif
#if defined(__aarch64__)
const Kernels* neon_kernels();
#endif

namespace {

const Kernels* detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return avx2_kernels();
  }
#endif
#if defined(__aarch64__)
  return neon_kernels();
#endif
  return &ref();
}

const Kernels* pick_initial() {
  const Kernels* k = nullptr;
  if (const char* env = std::getenv("NMT_KERNELS")) {
    for (const Kernels* cand : available()) {
      if (std::strcmp(cand->name, env) == 0) k = cand;
    }
    if (!k) {
      log_warn("NMT_KERNELS=", env, " not available, auto-selecting");
    }
  }
  if (!k) k = detect();
  log_debug("kernel lane: ", k->name);
  return k;
}

const Kernels*& current() {
  static const Kernels* k = pick_initial();
  return k;
}

}  // namespace

const Kernels& active() { return *current(); }

bool select(const std::string& name) {
  for (const Kernels* cand : available()) {
    if (name == cand->name) {
      current() = cand;
      return true;
    }
  }
  return false;
}

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out;
  out.push_back(&ref());
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    out.push_back(avx2_kernels());
  }
#endif
#if defined(__aarch64__)
  out.push_back(neon_kernels());
#endif
  return out;
}

}  // namespace nmt::kernels
