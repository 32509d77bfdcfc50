#pragma once

#include <span>

#include "rosetta/ir/response.hpp"
#include "rosetta/ir/stream.hpp"

namespace rosetta::ir {

/// Folds a grammar-valid event sequence into the equivalent single-choice
/// IRResponse: text/reasoning deltas concatenate per block, tool-call
/// fragments reassemble into tool_input objects. Throws
/// errors::ProtocolViolation on sequences the grammar would reject.
IRResponse assemble_response(std::span<const StreamEvent> events);

/// Concatenation of all text deltas, in order. The cheap "did the words
/// survive" oracle used by streaming tests.
std::string assemble_text(std::span<const StreamEvent> events);

} // namespace rosetta::ir
