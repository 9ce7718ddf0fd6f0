#pragma once

#include <cstdint>
#include <random>

#include "tracelab/exactla/scalar.hpp"

namespace tracelab {

/// Seeded source for verification samples. Only the raw mt19937_64 stream is
/// used (its output is fixed by the standard), so samples are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Uniform residue for F_p; an integer in [-3, 3] for the rationals.
  Scalar scalar(const Field& f) {
    if (f.is_rational()) return Scalar(f, static_cast<long>(next() % 7) - 3);
    return Scalar::from_residue(f, next() % f.characteristic());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tracelab
