#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "tracelab/exactla/field.hpp"
#include "tracelab/exactla/kernels.hpp"
#include "tracelab/random.hpp"

using namespace tracelab;

namespace {

std::vector<std::uint32_t> residues(Rng& rng, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.next() % p);
  return v;
}

std::uint32_t largest_prime_at_most(std::uint32_t n) {
  while (!is_prime(n)) --n;
  return n;
}

}  // namespace

TEST_CASE("scalar kernels match a direct 64-bit reference") {
  const auto& k = simd::scalar_kernels();
  Rng rng(1);
  for (std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
    auto dst = residues(rng, p, 37), src = residues(rng, p, 37);
    const std::uint32_t c = static_cast<std::uint32_t>(rng.next() % p);
    auto expect = dst;
    for (std::size_t i = 0; i < expect.size(); ++i)
      expect[i] = static_cast<std::uint32_t>((expect[i] + std::uint64_t{c} * src[i]) % p);
    k.axpy(dst.data(), src.data(), c, p, dst.size());
    CHECK(dst == expect);
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference bit for bit") {
  const simd::ModpKernels* v = simd::avx2_kernels();
  if (v == nullptr || !simd::cpu_has_avx2()) {
    MESSAGE("no AVX2 variant on this machine; only the scalar path is exercised");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  const std::uint32_t top = largest_prime_at_most(v->max_prime);
  Rng rng(2);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 65521u, 1000003u, top}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 131u}) {
      for (int t = 0; t < 8; ++t) {
        auto a = residues(rng, p, n), b = residues(rng, p, n);
        // Extremes of the residue range exercise the quotient correction.
        if (n > 0 && t == 0) a[0] = b[0] = p - 1;
        const std::uint32_t c = t == 1 ? p - 1 : static_cast<std::uint32_t>(rng.next() % p);
        auto a1 = a, a2 = a;
        ref.axpy(a1.data(), b.data(), c, p, n);
        v->axpy(a2.data(), b.data(), c, p, n);
        CHECK(a1 == a2);
        ref.scale(a1.data(), c, p, n);
        v->scale(a2.data(), c, p, n);
        CHECK(a1 == a2);
      }
    }
  }
}

TEST_CASE("dispatch respects the modulus bound") {
  const auto& small = simd::kernels_for(3);
  const auto& huge = simd::kernels_for(2147483647u);
  CHECK(huge.name == "scalar");
  if (simd::cpu_has_avx2() && simd::avx2_kernels() != nullptr && std::getenv("TRACELAB_KERNELS") == nullptr)
    CHECK(small.name == "avx2");
  else
    CHECK(small.name == "scalar");
}
