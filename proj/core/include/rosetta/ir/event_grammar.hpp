#pragma once

#include <span>
#include <string>
#include <vector>

#include "rosetta/ir/stream.hpp"

namespace rosetta::ir {

struct GrammarViolation {
  std::size_t event_ordinal = 0;
  std::string message;
};

struct GrammarReport {
  std::vector<GrammarViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks a stream event sequence against the block-lifecycle grammar:
/// stream_start first and exactly once, stream_end last and exactly once,
/// balanced block start/end, deltas strictly inside their block with a
/// kind matching the block, block indices monotonically non-decreasing,
/// tool_call_start immediately inside a tool_call block, at most one
/// finish and one usage, both outside open blocks.
GrammarReport check_event_grammar(std::span<const StreamEvent> events);

} // namespace rosetta::ir
