#pragma once

#include "rosetta/ir/request.hpp"
#include "rosetta/ir/response.hpp"

namespace rosetta::ir {

/// Structural equality over parsed JSON trees: object key order ignored,
/// array order significant, numbers compared by mathematical value
/// (1 == 1.0, exact integer semantics, IEEE-754 doubles, no epsilon),
/// strings byte-exact.
bool structural_equal(const Json& a, const Json& b);

// Semantic profiles project an IR value onto its application-relevant
// fields: roles, text content, tool names and inputs, tool definitions,
// generation parameters, finish reasons. Two payloads are semantically
// equivalent when their profiles are structurally equal. Used by the
// strip-mode fidelity checks.
Json semantic_profile(const IRRequest& request);
Json semantic_profile(const IRResponse& response);

} // namespace rosetta::ir
