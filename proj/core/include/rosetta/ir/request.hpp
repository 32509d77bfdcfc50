#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rosetta/ir/config.hpp"
#include "rosetta/ir/message.hpp"
#include "rosetta/ir/tools.hpp"

namespace rosetta::ir {

/// Provider-neutral request envelope. `model` and `messages` are the only
/// required fields; everything else is optional union-of-providers surface.
struct IRRequest {
  std::string model;
  std::vector<Message> messages;
  std::optional<SystemMessage> system;
  std::optional<std::vector<ToolDefinition>> tools;
  std::optional<ToolChoice> tool_choice;
  std::optional<ToolCallConfig> tool_call_config;
  std::optional<GenerationConfig> generation;
  std::optional<ResponseFormatConfig> response_format;
  std::optional<StreamConfig> stream;
  std::optional<ReasoningConfig> reasoning;
  Json cache;               // open object; null when unset
  Json provider_extensions; // open object keyed by format name; null when unset

  friend bool operator==(const IRRequest&, const IRRequest&) = default;
};

} // namespace rosetta::ir
