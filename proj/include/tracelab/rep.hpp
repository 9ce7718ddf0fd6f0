#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/algebra.hpp"
#include "tracelab/random.hpp"

namespace tracelab {

/// Finite-dimensional left module: one dim x dim action matrix per algebra
/// basis element.
class AModule {
 public:
  AModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string name = {});

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const Field& field() const noexcept { return algebra_->field(); }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Matrix& action(std::size_t i) const { return action_[i]; }
  [[nodiscard]] const std::vector<Matrix>& actions() const noexcept { return action_; }
  /// Action of an arbitrary algebra element.
  [[nodiscard]] Matrix act(const Matrix& a) const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const AModule>;

/// Unit acts as identity ("unit", {}) and action(b_i) action(b_j) =
/// sum_k c_ijk action(b_k) ("multiplicative", {i, j}).
ValidationReport validate_module(const AModule& m);

/// Equality of presentation: same algebra, same dimension, equal matrices.
/// Isomorphism is a separate question (find_isomorphism).
bool same_presentation(const AModule& a, const AModule& b);

/// Intertwiner source -> target stored as a target.dim x source.dim matrix.
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;

  [[nodiscard]] bool is_intertwiner() const;
  [[nodiscard]] bool is_zero() const { return matrix.is_zero(); }
};

ModuleMap identity_map(const ModulePtr& m);
ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target);
ModuleMap operator+(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator-(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator*(const Scalar& s, const ModuleMap& f);
bool operator==(const ModuleMap& f, const ModuleMap& g);

/// g o f. Throws CompositionMismatch unless f.target and g.source have the
/// same presentation.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// Basis of Hom_A(M, N), from the kernel of the intertwining equations for
/// the algebra's generators. Throws AlgebraMismatch.
std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n);

/// Linear combination sum_i c_i basis[i] with seeded coefficients; the zero
/// map when the basis is empty.
ModuleMap random_map(const std::vector<ModuleMap>& basis, const ModulePtr& source,
                     const ModulePtr& target, Rng& rng);

ModulePtr regular_module(const AlgebraPtr& a);
/// A^n; generator i is the unit in copy i, coordinates (i, k) -> i * dim + k.
ModulePtr free_module(const AlgebraPtr& a, std::size_t n);
ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n);
/// Same module in the basis given by the columns of an invertible matrix;
/// returns the module and the isomorphism new -> old.
std::pair<ModulePtr, ModuleMap> change_basis(const ModulePtr& m, const Matrix& basis);
/// Submodule A.v spanned by v; returns the module and its inclusion.
std::pair<ModulePtr, ModuleMap> cyclic_submodule(const ModulePtr& m, const Matrix& v);

/// Absolutely simple: the action matrices span all of End_k(M).
bool is_absolutely_simple(const AModule& m);

/// An invertible intertwiner M -> N if one is found. Tries the hom basis in
/// order, then seeded random combinations.
std::optional<ModuleMap> find_isomorphism(const ModulePtr& m, const ModulePtr& n,
                                          std::uint64_t seed = 1, int attempts = 64);

/// The left ideal A e with basis the pivot columns of x -> x e.
struct ProjectiveModule {
  ModulePtr module;
  Matrix idempotent;  ///< e in A
  Matrix embedding;   ///< dim A x dim(Ae); columns are the basis of Ae inside A
  Matrix generator;   ///< coordinates of e in the module basis
};

/// Throws NotIdempotent when e^2 != e.
ProjectiveModule projective(const AlgebraPtr& a, const Matrix& e);

/// Free cover pi: A^n -> M sending generator i to the i-th generator of M,
/// with a section iota (pi o iota = id).
struct ProjectivePresentation {
  ModulePtr module;
  std::size_t n = 0;
  ModulePtr free;
  ModuleMap pi;
  ModuleMap iota;
};

/// Cover by the basis of M (n = dim M). Throws NotProjective.
ProjectivePresentation split_projective(const ModulePtr& m);
/// Cover by the given generators (columns). Throws NotProjective, also when
/// the generators do not generate M.
ProjectivePresentation split_projective(const ModulePtr& m, const Matrix& generators);

/// The endomorphism iota o f o pi of A^n read as an n x n matrix over A
/// acting by right multiplication; returns the sum of its diagonal entries.
Matrix diagonal_sum(const ProjectivePresentation& p, const ModuleMap& f);

}  // namespace tracelab
