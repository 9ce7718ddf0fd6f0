#include "tracelab/exactla/scalar.hpp"

#include <cassert>
#include <ostream>

#include "tracelab/error.hpp"

namespace tracelab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::MissingIdempotents: return "MissingIdempotents";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::HopfMismatch: return "HopfMismatch";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::IntegralNotFound: return "IntegralNotFound";
    case ErrorKind::NotPivotal: return "NotPivotal";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DegenerateGram: return "DegenerateGram";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (p_ > kMaxPrime || !is_prime(p_)))
    throw Error(ErrorKind::InvalidField,
                "characteristic " + std::to_string(p_) + " is neither 0 nor a prime below 2^31");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

std::uint64_t reduce_signed(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(const Field& field, long value) : p_(field.characteristic()) {
  if (p_ == 0)
    v_ = mpq_class(value);
  else
    v_ = reduce_signed(value, p_);
}

Scalar::Scalar(const Field& field, const mpq_class& value) : p_(field.characteristic()) {
  if (p_ == 0) {
    mpq_class q = value;
    q.canonicalize();
    v_ = std::move(q);
    return;
  }
  std::uint64_t den = reduce_mpz(value.get_den(), p_);
  if (den == 0)
    throw Error(ErrorKind::FieldMismatch, "denominator vanishes in F" + std::to_string(p_));
  v_ = reduce_mpz(value.get_num(), p_) * inv_mod(den, p_) % p_;
}

Scalar Scalar::from_residue(const Field& f, std::uint64_t r) {
  Scalar s(f, 0);
  assert(!f.is_rational() && r < f.characteristic());
  s.v_ = r;
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0)
    throw Error(ErrorKind::ParseError, "not a scalar: \"" + s + "\"");
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator: \"" + s + "\"");
  q.canonicalize();
  if (f.characteristic() != 0 && q.get_den() % f.characteristic() == 0)
    throw Error(ErrorKind::ParseError, "\"" + s + "\" has no value in " + f.name());
  return Scalar(f, q);
}

bool Scalar::is_zero() const noexcept {
  if (p_ == 0) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (p_ == 0) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorKind::FieldMismatch, "residue() requested from a rational scalar");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorKind::FieldMismatch, "rational() requested from a residue");
  return std::get<mpq_class>(v_);
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw Error(ErrorKind::FieldMismatch,
                Field(p_).name() + " vs " + Field(o.p_).name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "division by zero");
  Scalar r = *this;
  if (p_ == 0) {
    mpq_class q = 1 / std::get<mpq_class>(v_);
    q.canonicalize();
    r.v_ = std::move(q);
  } else {
    r.v_ = inv_mod(std::get<std::uint64_t>(v_), p_);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<std::uint64_t>(v_);
    a += std::get<std::uint64_t>(o.v_);
    if (a >= p_) a -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<std::uint64_t>(v_);
    a += p_ - std::get<std::uint64_t>(o.v_);
    if (a >= p_) a -= p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<std::uint64_t>(v_);
    a = a * std::get<std::uint64_t>(o.v_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) {
    std::get<mpq_class>(r.v_) = -std::get<mpq_class>(v_);
  } else {
    auto a = std::get<std::uint64_t>(v_);
    r.v_ = a == 0 ? 0 : p_ - a;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

std::string Scalar::str() const {
  if (p_ == 0) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tracelab
