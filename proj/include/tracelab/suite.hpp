#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "tracelab/workspace.hpp"

namespace tracelab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Overrides every per-suite sample count when set.
  std::optional<std::size_t> samples;
  std::size_t cyclicity_samples = 100;      ///< per algebra, spread over (P, Q) pairs
  std::size_t partial_trace_samples = 25;   ///< per (P, X)
  std::size_t trace_field_samples = 50;     ///< per algebra
};

/// Projectives A e_r for the idempotent list, named P0, P1, ...
std::vector<ProjectiveModule> catalog_projectives(const Workspace& ws);

/// Builds the Frobenius structure from the workspace's pivot and form, or
/// returns the reason it is unavailable (an ErrorKind name or "no pivot/form").
std::variant<FrobStructure, std::string> frobenius_of(const Workspace& ws);

/// Everything `verify` runs: pairing and cyclicity, Nakayama comparison,
/// duality and distinguished object, then (when a Frobenius structure exists)
/// partial trace, pivot monoidality, the trace field suite and the t(xi) table.
VerificationReport verify_workspace(const Workspace& ws, const SuiteOptions& opt);

/// Header "suite\tcheck\tsubject\tresult\tdetail"; result is pass, FAIL or skipped.
std::string to_tsv(const VerificationReport& r);

}  // namespace tracelab
