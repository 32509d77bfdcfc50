#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rosetta/ir/content.hpp"

namespace rosetta::ir {

enum class Role { system, user, assistant, tool };

constexpr std::string_view role_name(Role r) {
  switch (r) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
    case Role::tool: return "tool";
  }
  return "unknown";
}

enum class StreamingState { partial, complete };

struct MessageMetadata {
  std::optional<std::string> id;
  std::optional<std::int64_t> timestamp; // Unix epoch seconds
  std::optional<StreamingState> streaming_state;
  Json custom; // converter round-trip data; emptied in strip mode

  bool empty() const {
    return !id && !timestamp && !streaming_state &&
           (custom.is_null() || (custom.is_object() && custom.empty()));
  }

  friend bool operator==(const MessageMetadata&, const MessageMetadata&) = default;
};

struct SystemMessage {
  std::vector<ContentPart> content;
  MessageMetadata metadata;

  friend bool operator==(const SystemMessage&, const SystemMessage&) = default;
};

struct UserMessage {
  std::vector<ContentPart> content;
  MessageMetadata metadata;

  friend bool operator==(const UserMessage&, const UserMessage&) = default;
};

struct AssistantMessage {
  std::vector<ContentPart> content;
  MessageMetadata metadata;

  friend bool operator==(const AssistantMessage&, const AssistantMessage&) = default;
};

struct ToolMessage {
  std::vector<ContentPart> content;
  MessageMetadata metadata;

  friend bool operator==(const ToolMessage&, const ToolMessage&) = default;
};

using Message = std::variant<SystemMessage, UserMessage, AssistantMessage, ToolMessage>;

inline Role message_role(const Message& m) {
  return static_cast<Role>(m.index());
}

inline const std::vector<ContentPart>& message_content(const Message& m) {
  return std::visit([](const auto& v) -> const std::vector<ContentPart>& { return v.content; }, m);
}

inline std::vector<ContentPart>& message_content(Message& m) {
  return std::visit([](auto& v) -> std::vector<ContentPart>& { return v.content; }, m);
}

inline const MessageMetadata& message_metadata(const Message& m) {
  return std::visit([](const auto& v) -> const MessageMetadata& { return v.metadata; }, m);
}

inline MessageMetadata& message_metadata(Message& m) {
  return std::visit([](auto& v) -> MessageMetadata& { return v.metadata; }, m);
}

} // namespace rosetta::ir
