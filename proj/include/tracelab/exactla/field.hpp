#pragma once

#include <cstdint>
#include <string>

namespace tracelab {

/// Ground field: the rationals (characteristic 0) or a prime field F_p.
/// Primes are limited to p < 2^31 so that residue products fit in 64 bits.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  /// Throws Error(InvalidField) unless `characteristic` is 0 or a prime below 2^31.
  explicit Field(std::uint32_t characteristic = 0);

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p) { return Field(p); }

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_rational() const noexcept { return p_ == 0; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace tracelab
