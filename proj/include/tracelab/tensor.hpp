#pragma once

#include <optional>

#include "tracelab/nakayama.hpp"

namespace tracelab {

/// Hopf structure on an algebra. Tensor coordinates (i, k) of A (x) A sit at
/// i * dim + k.
struct HopfData {
  AlgebraPtr algebra;
  Matrix coproduct;  ///< dim^2 x dim; column j is Delta(b_j)
  Matrix counit;     ///< 1 x dim
  Matrix antipode;   ///< dim x dim
};

/// Laws: "coassociativity" (j), "left_counit"/"right_counit" (j),
/// "antipode_left"/"antipode_right" (j), "coproduct_multiplicative" (i, j),
/// "coproduct_unit" {}, "counit_multiplicative" (i, j), "counit_unit" {}.
ValidationReport validate_hopf(const HopfData& h);

/// Delta(a) for an arbitrary element, as a dim^2 x 1 vector.
Matrix coproduct_of(const HopfData& h, const Matrix& a);

ModulePtr trivial_module(const HopfData& h);

/// M (x) N with a.(m (x) n) = a(1) m (x) a(2) n; coordinates (m, n) at
/// m * dim N + n. Throws HopfMismatch for modules over another algebra.
ModulePtr tensor_module(const HopfData& h, const ModulePtr& m, const ModulePtr& n);
/// f (x) g between the tensor products of the sources and of the targets.
ModuleMap tensor_map(const HopfData& h, const ModuleMap& f, const ModuleMap& g);

enum class Side { Left, Right };

/// Left dual X^v (action through S) with ev: X^v (x) X -> k and
/// coev: k -> X (x) X^v; right dual vX (through S^-1) with ev: X (x) vX -> k
/// and coev: k -> vX (x) X. Dual vectors use the dual basis.
struct DualData {
  Side side = Side::Left;
  ModulePtr module;
  ModulePtr dual;
  ModuleMap ev;
  ModuleMap coev;
};

/// Throws AntipodeNotInvertible for a right dual when S is singular.
DualData dual_module(const HopfData& h, const ModulePtr& m, Side side);

/// Both snake identities, as matrix equalities ("zigzag_1", "zigzag_2"), and
/// the intertwining property of ev and coev ("ev_intertwines", "coev_intertwines").
ValidationReport validate_duality(const HopfData& h, const DualData& d);

struct DistinguishedObject {
  Matrix integral;             ///< dim x 1, a nonzero left integral
  Matrix modular_character;    ///< 1 x dim, alpha with integral . a = alpha(a) integral
  Matrix character_inverse;    ///< 1 x dim, alpha o S
  ModulePtr module;            ///< D = k_{alpha o S}
  ModulePtr inverse_module;    ///< D^-1 = k_alpha, isomorphic to N(k)
  [[nodiscard]] bool unimodular(const Matrix& counit) const { return modular_character == counit; }
};

/// Throws IntegralNotFound unless the left integrals form a line.
DistinguishedObject distinguished_object(const HopfData& h);

/// One-dimensional module with b_i acting by chi(b_i).
ModulePtr character_module(const AlgebraPtr& a, const Matrix& chi, std::string name);

struct PivotalStructure {
  Matrix pivot;          ///< g, dim x 1
  Matrix pivot_inverse;  ///< g^-1
};

/// Checks g grouplike, invertible, and S^2(b_i) = g b_i g^-1; throws NotPivotal.
PivotalStructure pivotal_structure(const HopfData& h, const Matrix& g);

struct FrobStructure {
  HopfData hopf;
  PivotalStructure pivot;
  Matrix frobenius_form;  ///< lambda, dim x 1 column of values lambda(b_i)
  DistinguishedObject distinguished;
};

/// Checked in this order: NotPivotal, NotUnimodular, NotSymmetric, Degenerate.
FrobStructure symmetric_frobenius(const HopfData& h, const Matrix& g, const Matrix& lambda);

/// lambda of the diagonal sum of iota f pi. Throws NotProjective.
Scalar modified_trace(const FrobStructure& fs, const ModuleMap& f);
Scalar modified_trace(const FrobStructure& fs, const ProjectivePresentation& p, const ModuleMap& f);

/// X (x) vX -> k, x (x) phi -> phi(x), and the pivotal coevaluation
/// k -> X (x) vX, 1 -> sum_j g x_j (x) phi^j, which closes the right loop.
ModuleMap pivotal_coevaluation(const FrobStructure& fs, const DualData& right);

/// (id_P (x) ev) o (f (x) id_vX) o (id_P (x) coev_g) for f in End(P (x) X).
/// Throws ShapeMismatch when f does not act on tensor_module(P, X).
ModuleMap partial_trace(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& x,
                        const ModuleMap& f);

/// omega_X = rho_X(g^-1): X^vv -> X. Checks that it intertwines for X, Y and
/// X (x) Y and that omega_{X (x) Y} = omega_X (x) omega_Y on the canonical
/// identification of (X (x) Y)^vv with X^vv (x) Y^vv.
VerificationReport verify_pivot_monoidal(const FrobStructure& fs, const ModulePtr& x,
                                         const ModulePtr& y);

/// t_P(tr(f)) = t_{P (x) X}(f) on seeded random f.
VerificationReport verify_partial_trace(const FrobStructure& fs, const ModulePtr& p,
                                        const ModulePtr& x, std::size_t samples,
                                        std::uint64_t seed);

}  // namespace tracelab
