#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tracelab/exactla/matrix.hpp"
#include "tracelab/report.hpp"

namespace tracelab {

/// Finite-dimensional associative unital algebra given by structure constants
/// b_i b_j = sum_k c[i][j][k] b_k. Elements are dim x 1 coefficient vectors.
///
/// Construction does not check the axioms; run validate_algebra for that.
class Algebra {
 public:
  /// `structure` has dim^3 entries indexed (i * dim + j) * dim + k.
  Algebra(std::string name, const Field& field, std::vector<std::string> labels,
          std::vector<Scalar> structure, Matrix unit, std::vector<Matrix> idempotents = {},
          bool idempotents_complete = false);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const Matrix& unit() const noexcept { return unit_; }
  [[nodiscard]] const std::vector<Matrix>& idempotents() const noexcept { return idempotents_; }
  [[nodiscard]] bool idempotents_complete() const noexcept { return complete_; }

  [[nodiscard]] const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  [[nodiscard]] const std::vector<Scalar>& structure_constants() const noexcept { return c_; }

  [[nodiscard]] Matrix basis(std::size_t i) const { return Matrix::unit(field_, dim(), i); }
  [[nodiscard]] Matrix zero() const { return Matrix(field_, dim(), 1); }
  [[nodiscard]] Matrix multiply(const Matrix& a, const Matrix& b) const;

  /// Matrix of x -> b_i x; column j holds b_i b_j.
  [[nodiscard]] const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x b_i; column j holds b_j b_i.
  [[nodiscard]] const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  [[nodiscard]] Matrix left_mult(const Matrix& a) const;
  [[nodiscard]] Matrix right_mult(const Matrix& a) const;
  /// dim x dim^2 matrix of A (x) A -> A; column i * dim + j holds b_i b_j.
  [[nodiscard]] Matrix multiplication_map() const;

  /// Basis indices whose subalgebra closure is the whole algebra. Chosen
  /// greedily in index order; intertwining with these implies intertwining
  /// with every element.
  [[nodiscard]] const std::vector<std::size_t>& generators() const noexcept { return generators_; }

 private:
  std::string name_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  Matrix unit_;
  std::vector<Matrix> idempotents_;
  bool complete_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Associativity (law "associativity", indices (i, j, k)), unit laws
/// ("left_unit"/"right_unit", (i)), idempotency ("idempotent", (r)),
/// orthogonality ("orthogonal", (r, s)) and completeness ("complete", {}).
ValidationReport validate_algebra(const Algebra& a);

/// A* with (a.phi)(c) = phi(c a) and (phi.b)(c) = phi(b c), on the dual basis.
/// The right action matrices compose anti-multiplicatively.
struct DualBimodule {
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};
DualBimodule dual_bimodule(const Algebra& a);

/// Independent spanning set of [A, A] (as columns), reduced from all basis
/// commutators b_i b_j - b_j b_i.
Matrix commutator_subspace(const Algebra& a);

/// Entry (i, j) = dim e_i A e_j = dim Hom_A(A e_i, A e_j). Both routes are
/// computed and must agree. Throws MissingIdempotents without a complete list.
std::vector<std::vector<std::size_t>> cartan_matrix(const AlgebraPtr& a);

}  // namespace tracelab
