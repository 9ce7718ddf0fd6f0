#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "tracelab/exactla/field.hpp"

namespace tracelab {

/// Exact element of a Field. Rationals are kept as reduced fractions with a
/// positive denominator; residues live in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : p_(0), v_(mpq_class(0)) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  /// Residue already reduced into [0, p); no check beyond an assertion.
  static Scalar from_residue(const Field& f, std::uint64_t r);
  /// Parses "3", "-2", "3/4". Fractions over F_p need an invertible denominator.
  static Scalar parse(const Field& f, std::string_view text);

  [[nodiscard]] Field field() const { return Field(p_); }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;
  /// Residue for char p; throws for the rationals.
  [[nodiscard]] std::uint64_t residue() const;
  /// Value for char 0; throws for prime fields.
  [[nodiscard]] const mpq_class& rational() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void check_same(const Scalar& o) const;

  std::uint32_t p_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace tracelab
