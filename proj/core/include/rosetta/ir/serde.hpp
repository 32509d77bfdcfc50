#pragma once

#include <span>
#include <vector>

#include "rosetta/ir/request.hpp"
#include "rosetta/ir/response.hpp"
#include "rosetta/ir/stream.hpp"

namespace rosetta::ir {

// Canonical IR JSON: snake_case field names, `type` discriminator on tagged
// unions, absent-means-unset (no explicit nulls). This serialization is the
// CLI interchange format and is stable.

Json to_json(const ContentPart& part);
Json to_json(const Message& message);
Json to_json(const SystemMessage& message);
Json to_json(const ToolDefinition& tool);
Json to_json(const GenerationConfig& config);
Json to_json(const IRRequest& request);
Json to_json(const UsageInfo& usage);
Json to_json(const IRResponse& response);
Json to_json(const StreamEvent& event);
Json to_json(std::span<const StreamEvent> events);

// Parsers throw errors::MalformedInput with a JSON path on structural
// problems (wrong types, unknown discriminators). Semantic invariants are
// the validator's job, not the parser's.
ContentPart content_part_from_json(const Json& j);
Message message_from_json(const Json& j);
IRRequest request_from_json(const Json& j);
IRResponse response_from_json(const Json& j);
StreamEvent stream_event_from_json(const Json& j);
std::vector<StreamEvent> stream_events_from_json(const Json& j);

} // namespace rosetta::ir
