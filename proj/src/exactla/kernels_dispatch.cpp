#include <cstdlib>
#include <string_view>

#include "tracelab/exactla/kernels.hpp"

namespace tracelab::simd {

namespace {

bool scalar_forced() {
  static const bool forced = [] {
    const char* env = std::getenv("TRACELAB_KERNELS");
    return env != nullptr && std::string_view(env) == "scalar";
  }();
  return forced;
}

}  // namespace

const ModpKernels& kernels_for(std::uint32_t p) noexcept {
  if (!scalar_forced() && cpu_has_avx2()) {
    const ModpKernels* k = avx2_kernels();
    if (k != nullptr && p <= k->max_prime) return *k;
  }
  return scalar_kernels();
}

}  // namespace tracelab::simd
