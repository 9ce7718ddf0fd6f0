#include "tracelab/exactla/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define TRACELAB_HAVE_AVX2_VARIANT 1
#include <immintrin.h>
#endif

namespace tracelab::simd {

#if TRACELAB_HAVE_AVX2_VARIANT

namespace {

// Residues below 2^26 keep dst + c*src under 2^53, so the whole update is exact
// in double precision. The quotient estimate floor(x/p) may be off by one in
// either direction; the two conditional corrections fix that.
constexpr std::uint32_t kMaxPrime = 1u << 26;

__attribute__((target("avx2"))) inline __m128i reduce4(__m256d x, __m256d vp, __m256d vinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, vp));
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(big, vp));
  return _mm256_cvttpd_epi32(r);
}

__attribute__((target("avx2"))) void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (c == 0) return;
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256d x = _mm256_add_pd(d, _mm256_mul_pd(vc, s));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), reduce4(x, vp, vinv));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{c} * src[i]) % p);
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* dst, std::uint32_t c,
                                                 std::uint32_t p, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), reduce4(_mm256_mul_pd(vc, d), vp, vinv));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(std::uint64_t{c} * dst[i] % p);
}

constexpr ModpKernels kAvx2{"avx2", &axpy_avx2, &scale_avx2, kMaxPrime - 1};

}  // namespace

const ModpKernels* avx2_kernels() noexcept { return &kAvx2; }

bool cpu_has_avx2() noexcept {
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has;
}

#else

const ModpKernels* avx2_kernels() noexcept { return nullptr; }
bool cpu_has_avx2() noexcept { return false; }

#endif

}  // namespace tracelab::simd
