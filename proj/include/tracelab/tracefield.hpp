#pragma once

#include <memory>

#include "tracelab/tensor.hpp"

namespace tracelab {

/// A / [A, A] with representatives for the quotient basis.
struct HH0Space {
  AlgebraPtr algebra;
  Matrix commutator_basis;  ///< dim x |[A,A]|
  Matrix quotient_basis;    ///< dim x dim HH0, representatives
  Matrix projection;        ///< dim HH0 x dim
  [[nodiscard]] std::size_t dim() const noexcept { return projection.rows(); }
};

using HH0Ptr = std::shared_ptr<const HH0Space>;

HH0Ptr hh0(const AlgebraPtr& a);

struct HH0Class {
  HH0Ptr space;
  Matrix coords;  ///< dim HH0 x 1

  /// A representative in A.
  [[nodiscard]] Matrix representative() const { return space->quotient_basis * coords; }
};

bool operator==(const HH0Class& a, const HH0Class& b);

HH0Class hh0_class(const HH0Ptr& space, const Matrix& element);

/// Class of the diagonal sum of iota f pi. Throws NotProjective.
HH0Class hs_trace(const HH0Ptr& space, const ModuleMap& f);
HH0Class hs_trace(const HH0Ptr& space, const ProjectivePresentation& p, const ModuleMap& f);

/// lambda of any representative; well defined since lambda is symmetric.
Scalar trace_of_class(const FrobStructure& fs, const HH0Class& c);

/// Bases forward = {h^i} of Hom(P, Q) and backward = {h_i} of Hom(Q, P) with
/// t_P(h_i o h^j) = delta_ij.
struct DualBasisPair {
  ModulePtr p;
  ModulePtr q;
  std::vector<ModuleMap> forward;
  std::vector<ModuleMap> backward;
};

/// Gram-corrects the solved hom bases. Throws DegenerateGram.
DualBasisPair dual_bases(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q);
/// Same, starting from the given bases; backward is kept and forward corrected.
DualBasisPair dual_bases(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q,
                         std::vector<ModuleMap> forward, std::vector<ModuleMap> backward);

/// G_ij = t_P(h_i o h^j) for the given bases.
Matrix trace_gram(const FrobStructure& fs, const ModulePtr& p,
                  const std::vector<ModuleMap>& forward, const std::vector<ModuleMap>& backward);

/// xi_{P,Q} = sum_i h_i o h^i in End(P).
ModuleMap handle_element(const DualBasisPair& d);
ModuleMap handle_element(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q);

/// f * g = sum_i f o h_i o g o h^i for f in End(P), g in End(Q).
ModuleMap star(const DualBasisPair& d, const ModuleMap& f, const ModuleMap& g);
ModuleMap star(const FrobStructure& fs, const ModuleMap& f, const ModuleMap& g);

/// Star on classes: representatives a, b act on the regular module by right
/// multiplication, and the result is HS(R_a * R_b).
HH0Class star(const FrobStructure& fs, const HH0Class& a, const HH0Class& b);

/// Checks (a) centrality of xi against End(P), (b) t_P(xi) = dim Hom(P, Q),
/// (c) xi = dim Hom(P, Q) / d(P) id for simple P, (d) the class-level star
/// identity, (e) representative independence of HS(f * g), (f) HS(f * g) =
/// HS(g * f), over the projectives of the complete idempotent list.
/// `samples` drives (e) and (f).
VerificationReport verify_trace_field(const FrobStructure& fs, std::uint64_t seed,
                                      std::size_t samples = 50);

}  // namespace tracelab
