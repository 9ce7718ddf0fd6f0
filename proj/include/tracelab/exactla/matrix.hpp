#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracelab/exactla/field.hpp"
#include "tracelab/exactla/scalar.hpp"

namespace tracelab {

/// Dense row-major matrix over a Field. Vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix column(const std::vector<Scalar>& entries);
  static Matrix column(const Field& f, std::initializer_list<long> entries);
  /// Unit vector e_i of length n.
  static Matrix unit(const Field& f, std::size_t n, std::size_t i);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Entry of a column vector.
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  [[nodiscard]] std::span<const Scalar> entries() const noexcept { return data_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix col(std::size_t j) const;
  [[nodiscard]] Matrix row(std::size_t i) const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Scalar trace() const;
  /// Reinterprets a (rows*cols) x 1 vector in row-major order.
  [[nodiscard]] Matrix reshaped(std::size_t rows, std::size_t cols) const;
  /// Row-major flattening into a column vector.
  [[nodiscard]] Matrix vec() const { return reshaped(rows_ * cols_, 1); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);
  /// "[[1,0],[0,1]]"
  [[nodiscard]] std::string str() const;

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; row index (i, k) of A (x) B is i * B.rows() + k, column
/// index likewise. With this convention (A (x) B)(C (x) D) = AC (x) BD.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks, const Field& f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, const Field& f, std::size_t cols);

struct Rref {
  Matrix reduced;                   ///< fully reduced: pivots 1, zero above and below
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan with deterministic pivoting: columns left to right, first
/// nonzero row at or below the current one.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null-space basis as the columns of the result (cols(M) x nullity). Basis
/// vector for free column f has a 1 at f and zeros at the other free columns.
Matrix kernel(const Matrix& m);

struct Solution {
  Matrix particular;  ///< free variables set to zero
  Matrix kernel;      ///< columns span {v : Mv = 0}
};

/// All solutions of M x = b, or nullopt when b is outside the column span.
std::optional<Solution> solve(const Matrix& m, const Matrix& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Independent subset of the columns of M (the pivot columns), as columns.
Matrix column_basis(const Matrix& m);

/// Coordinates of the columns of `v` in the basis given by the columns of
/// `basis` (full column rank). Throws Error(Internal) if some column is not in
/// the span.
Matrix coordinates(const Matrix& basis, const Matrix& v);

/// Linear quotient V / W for W spanned by the columns of `span` (n x m).
/// The complement basis is the set of non-pivot coordinates of the RREF of
/// span^T, so representatives are standard unit vectors.
struct Quotient {
  Matrix projection;  ///< q x n, kernel exactly W
  Matrix lift;        ///< n x q, projection * lift = identity
  Matrix subspace;    ///< independent basis of W as columns
};
Quotient quotient(const Matrix& span, std::size_t n, const Field& f);

}  // namespace tracelab
