#pragma once

#include <cstdint>

#include "tracelab/report.hpp"
#include "tracelab/rep.hpp"

namespace tracelab {

/// N(X) = A* (x)_A X, together with its second model Hom_A(X, A)* and the
/// canonical evaluation isomorphism between the two.
struct NakayamaImage {
  ModulePtr source;
  /// The quotient of A* (x)_k X (coordinates phi^k (x) x_j at k * dim X + j)
  /// by the balancing relations phi.a (x) x - phi (x) a.x.
  ModulePtr module;
  Matrix projection;  ///< dim N(X) x (dim A * dim X)
  Matrix lift;        ///< (dim A * dim X) x dim N(X)
  /// Hom_A(X, A)* with (a.psi)(h) = psi(h.a), on the dual of `hom_basis`.
  ModulePtr homdual;
  std::vector<ModuleMap> hom_basis;
  /// phi (x) x -> (h -> phi(h(x))), module -> homdual; always invertible.
  ModuleMap comparison_iso;
};

NakayamaImage nakayama_object(const ModulePtr& x);

/// N(g) = id_{A*} (x) g descended to the quotients.
ModuleMap nakayama_map(const NakayamaImage& nx, const NakayamaImage& ny, const ModuleMap& g);
ModuleMap nakayama_map(const ModuleMap& g);

/// A projective A e with everything the trace pairing needs precomputed.
struct TwistedProjective {
  ProjectiveModule proj;
  NakayamaImage image;
  /// 1 x dim N(P): [phi (x) v] -> phi(v), the evaluation of g(f(e)) at 1.
  Matrix evaluation;
};

TwistedProjective twisted_projective(const ProjectiveModule& p);

/// <f, g> = (g(f(e)))(1) for f: P -> X and g: X -> N(P). Throws ShapeMismatch.
Scalar trace_pairing(const TwistedProjective& p, const ModuleMap& f, const ModuleMap& g);

/// Same pairing read through Hom_A(P, A)*: the functional g(f(e)) evaluated at
/// the inclusion P -> A. Independent route used by the verification suite.
Scalar trace_pairing_homdual(const TwistedProjective& p, const ModuleMap& f, const ModuleMap& g);

/// t_P(h) = <id_P, h> for h: P -> N(P).
Scalar twisted_trace(const TwistedProjective& p, const ModuleMap& h);

/// X -> N(X), x -> [lambda (x) x]. An intertwiner exactly when lambda is a
/// symmetric functional (lambda given as a dim A x 1 column of values).
ModuleMap untwisting(const Matrix& lambda, const NakayamaImage& nx);

/// Checks for P = Ae against a module X: full-rank Gram matrix of the pairing,
/// agreement of f (x) g -> t_P(g f) with the pairing, and agreement of both
/// pairing routes, entrywise on hom bases.
VerificationReport verify_calabi_yau(const TwistedProjective& p, const ModulePtr& x);

/// t_Q(f g) = t_P(N(g) f) for seeded f: P -> N(Q), g: Q -> P.
VerificationReport verify_cyclicity(const TwistedProjective& p, const TwistedProjective& q,
                                    std::size_t samples, std::uint64_t seed);

}  // namespace tracelab
