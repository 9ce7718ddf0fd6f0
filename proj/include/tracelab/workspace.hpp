#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracelab/tensor.hpp"

namespace tracelab {

/// Everything one input file (or catalog entry) describes.
struct Workspace {
  AlgebraPtr algebra;
  std::optional<HopfData> hopf;
  std::optional<Matrix> pivot;      ///< needs hopf
  std::optional<Matrix> frobenius;  ///< lambda as a dim x 1 column; needs hopf
  std::vector<ModulePtr> modules;
};

/// JSON text. Scalars are strings ("3/4", "2"); structure constants and
/// coproduct entries are sparse [i, j, k, "c"] lists. Throws ParseError with
/// the JSON path of the offending field (and line/column for syntax errors).
Workspace parse_workspace(const std::string& text);
std::string serialize_workspace(const Workspace& ws);

/// Runs validate_algebra, validate_hopf and validate_module and renders each
/// violation as "<object>: <law> (<indices>) <detail>".
std::vector<std::string> validate_workspace(const Workspace& ws);

/// Same field, structure, unit, idempotents, Hopf data, pivot, form and
/// module presentations (including names).
bool structurally_equal(const Workspace& a, const Workspace& b);

std::vector<std::string> catalog_names();
/// Throws ValidationError for unknown names.
Workspace catalog_workspace(const std::string& name);

/// Taft algebra of order n over a field containing the primitive n-th root q:
/// basis g^i x^j at index j * n + i, x g = q g x, Delta(x) = x (x) 1 + g (x) x.
/// n = 2, q = -1 over Q is the Sweedler algebra.
Workspace taft_workspace(std::string name, const Field& f, std::size_t n, const Scalar& q);

}  // namespace tracelab
