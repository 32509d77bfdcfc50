#pragma once

#include <optional>
#include <string>

#include "rosetta/json.hpp"

namespace rosetta::ir {

enum class ToolType { function, mcp };

struct ToolDefinition {
  std::string name;
  std::optional<std::string> description;
  Json parameters; // JSON Schema object; null when unset
  ToolType tool_type = ToolType::function;

  friend bool operator==(const ToolDefinition&, const ToolDefinition&) = default;
};

struct ToolChoice {
  enum class Mode { none, auto_, any, tool };
  Mode mode = Mode::auto_;
  std::optional<std::string> tool_name; // required iff mode == tool

  friend bool operator==(const ToolChoice&, const ToolChoice&) = default;
};

constexpr std::string_view tool_choice_mode_name(ToolChoice::Mode m) {
  switch (m) {
    case ToolChoice::Mode::none: return "none";
    case ToolChoice::Mode::auto_: return "auto";
    case ToolChoice::Mode::any: return "any";
    case ToolChoice::Mode::tool: return "tool";
  }
  return "unknown";
}

struct ToolCallConfig {
  std::optional<bool> parallel_tool_calls;

  friend bool operator==(const ToolCallConfig&, const ToolCallConfig&) = default;
};

} // namespace rosetta::ir
