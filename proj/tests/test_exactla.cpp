#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "tracelab/exactla/kernels.hpp"

using namespace tracelab;
using testing::kind_of;

namespace {

// Every vector of F_p^n, in lexicographic order of residues.
std::vector<Matrix> all_vectors(const Field& f, std::size_t n) {
  std::vector<Matrix> out;
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix v(f, n, 1);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = Scalar::from_residue(f, c % p);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.scalar(f);
  return m;
}

}  // namespace

TEST_CASE("field characteristic must be zero or prime") {
  CHECK(Field(0).is_rational());
  CHECK(Field(7).characteristic() == 7);
  CHECK(kind_of([] { Field(6); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { Field(1); }) == ErrorKind::InvalidField);
  CHECK(Field(3).name() == "F3");
  CHECK(Field::rationals().name() == "Q");
}

TEST_CASE("scalars stay canonical") {
  const Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "6/-8");
  CHECK(a.str() == "-3/4");
  CHECK((a + Scalar(q, 1)).str() == "1/4");
  CHECK((a * a).str() == "9/16");
  CHECK((a / a).is_one());
  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK(Scalar::parse(f5, "1/2").residue() == 3);
  CHECK(Scalar(f5, 3).inverse().residue() == 2);
  CHECK(kind_of([&] { Scalar::parse(f5, "1/5"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { Scalar::parse(q, "abc"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { (void)(Scalar(q, 1) + Scalar(f5, 1)); }) == ErrorKind::FieldMismatch);
  // No overflow in long chains of rationals.
  Scalar big = Scalar(q, 1);
  for (int i = 0; i < 200; ++i) big *= Scalar::parse(q, "3/2");
  for (int i = 0; i < 200; ++i) big /= Scalar::parse(q, "3/2");
  CHECK(big.is_one());
}

TEST_CASE("solve: small cases") {
  const Field q = Field::rationals();
  auto s1 = solve(Matrix::identity(q, 2), Matrix::column(q, {3, 5}));
  REQUIRE(s1);
  CHECK(s1->particular == Matrix::column(q, {3, 5}));
  CHECK(s1->kernel.cols() == 0);

  const Field f2 = Field::prime(2);
  auto s2 = solve(Matrix::from_rows(f2, {{1, 1}, {1, 1}}), Matrix::column(f2, {1, 1}));
  REQUIRE(s2);
  CHECK(s2->particular == Matrix::column(f2, {1, 0}));
  REQUIRE(s2->kernel.cols() == 1);
  CHECK(s2->kernel == Matrix::column(f2, {1, 1}));

  CHECK_FALSE(solve(Matrix(q, 2, 2), Matrix::column(q, {1, 0})));
  CHECK(kind_of([&] { solve(Matrix(q, 2, 2), Matrix::column(q, {1, 0, 0})); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { solve(Matrix(q, 2, 2), Matrix::column(f2, {1, 0})); }) ==
        ErrorKind::FieldMismatch);
}

TEST_CASE("kernel: small cases") {
  const Field q = Field::rationals();
  CHECK(kernel(Matrix::identity(q, 3)).cols() == 0);
  Matrix k = kernel(Matrix::from_rows(q, {{1, 2}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::column(q, {-2, 1}));
  CHECK(kernel(Matrix(q, 2, 3)).cols() == 3);
}

TEST_CASE("solve and kernel agree with brute-force enumeration over small prime fields") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng.index(3), c = 1 + rng.index(4);
      Matrix m = random_matrix(f, r, c, rng);
      Matrix b = random_matrix(f, r, 1, rng);
      std::size_t null_count = 0, sol_count = 0;
      for (const auto& v : all_vectors(f, c)) {
        if ((m * v).is_zero()) ++null_count;
        if (m * v == b) ++sol_count;
      }
      Matrix k = kernel(m);
      std::size_t expected_null = 1;
      for (std::size_t i = 0; i < k.cols(); ++i) expected_null *= p;
      CHECK(null_count == expected_null);
      CHECK(rank(m) + k.cols() == c);
      auto s = solve(m, b);
      CHECK(s.has_value() == (sol_count > 0));
      if (s) {
        CHECK(m * s->particular == b);
        CHECK(sol_count == null_count);
      }
    }
  }
}

TEST_CASE("rank-nullity and solve postconditions over Q and F_p") {
  Rng rng(5);
  for (std::uint32_t p : {0u, 5u, 65521u}) {
    const Field f(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng.index(6), c = 1 + rng.index(6);
      Matrix m = random_matrix(f, r, c, rng);
      if (trial % 3 == 0 && c > 1)
        for (std::size_t i = 0; i < r; ++i) m(i, 0) = m(i, 1);
      Matrix k = kernel(m);
      CHECK(rank(m) + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
      Matrix b = m * random_matrix(f, c, 1, rng);
      auto s = solve(m, b);
      REQUIRE(s);
      CHECK(m * s->particular == b);
    }
  }
}

TEST_CASE("inverse, coordinates and quotient") {
  const Field q = Field::rationals();
  Matrix m = Matrix::from_rows(q, {{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(q, 2));
  CHECK_FALSE(inverse(Matrix::from_rows(q, {{1, 2}, {2, 4}})));

  Matrix basis = Matrix::from_rows(q, {{1, 0}, {1, 1}, {0, 1}});
  Matrix v = Matrix::column(q, {2, 5, 3});
  CHECK(coordinates(basis, v) == Matrix::column(q, {2, 3}));
  CHECK(kind_of([&] { coordinates(basis, Matrix::column(q, {1, 0, 0})); }) == ErrorKind::Internal);

  Quotient quo = quotient(basis, 3, q);
  CHECK(quo.projection.rows() == 1);
  CHECK((quo.projection * basis).is_zero());
  CHECK(quo.projection * quo.lift == Matrix::identity(q, 1));
}

TEST_CASE("kron: small cases and the mixed-product law") {
  const Field q = Field::rationals();
  CHECK(kron(Matrix::identity(q, 2), Matrix::identity(q, 3)) == Matrix::identity(q, 6));
  CHECK(kron(Matrix::from_rows(q, {{0, 1}, {0, 0}}), Matrix::from_rows(q, {{2}})) ==
        Matrix::from_rows(q, {{0, 2}, {0, 0}}));
  const Field f3 = Field::prime(3);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(f3, 2, 2, rng), b = random_matrix(f3, 2, 2, rng);
    Matrix c = random_matrix(f3, 2, 2, rng), d = random_matrix(f3, 2, 2, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
  CHECK(kind_of([&] { kron(Matrix::identity(q, 1), Matrix::identity(f3, 1)); }) ==
        ErrorKind::FieldMismatch);
}

TEST_CASE("row-major vec identities used by the hom solver") {
  const Field f = Field::prime(7);
  Rng rng(8);
  Matrix t = random_matrix(f, 2, 3, rng);
  Matrix x = random_matrix(f, 3, 3, rng), y = random_matrix(f, 2, 2, rng);
  CHECK((t * x).vec() == kron(Matrix::identity(f, 2), x.transpose()) * t.vec());
  CHECK((y * t).vec() == kron(y, Matrix::identity(f, 3)) * t.vec());
}
