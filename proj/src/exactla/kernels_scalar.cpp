#include "tracelab/exactla/kernels.hpp"

namespace tracelab::simd {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                 std::size_t n) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{c} * src[i]) % p);
}

void scale_scalar(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(std::uint64_t{c} * dst[i] % p);
}

constexpr ModpKernels kScalar{"scalar", &axpy_scalar, &scale_scalar, (1u << 31) - 1};

}  // namespace

const ModpKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace tracelab::simd
