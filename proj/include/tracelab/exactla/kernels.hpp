#pragma once

// Inner loops of prime-field row reduction and matrix products.
//
// Each instruction set provides the same two kernels over residue rows stored
// as uint32_t in [0, p). The scalar variants are the reference; SIMD variants
// must agree with them bit for bit (tests/test_kernels.cpp). Selection happens
// once at runtime from CPU features and the modulus.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tracelab::simd {

struct ModpKernels {
  std::string_view name;
  /// dst[i] = (dst[i] + c * src[i]) mod p, c in [0, p).
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
               std::size_t n);
  /// dst[i] = (c * dst[i]) mod p.
  void (*scale)(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n);
  /// Largest modulus the variant handles exactly.
  std::uint32_t max_prime;
};

const ModpKernels& scalar_kernels() noexcept;

/// nullptr when the build has no AVX2 variant (non-x86 targets).
const ModpKernels* avx2_kernels() noexcept;

bool cpu_has_avx2() noexcept;

/// Fastest variant usable for modulus p on this CPU. Setting the environment
/// variable TRACELAB_KERNELS=scalar forces the reference path.
const ModpKernels& kernels_for(std::uint32_t p) noexcept;

}  // namespace tracelab::simd
