#pragma once

#include <string>
#include <vector>

#include "rosetta/ir/request.hpp"
#include "rosetta/ir/response.hpp"

namespace rosetta::ir {

struct Violation {
  std::string json_path; // e.g. "$.messages[2].content[0]"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Reports every invariant violation, not just the first. Violations are
/// data, not failures; these functions never throw.
ValidationReport validate_ir_request(const IRRequest& request);
ValidationReport validate_ir_response(const IRResponse& response);

/// True iff `kind` may appear in content of a `role` message. The full
/// role-by-part matrix lives in one place so tests can enumerate it.
bool part_allowed_in_role(Role role, PartKind kind);

} // namespace rosetta::ir
