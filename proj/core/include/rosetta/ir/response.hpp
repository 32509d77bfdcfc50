#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rosetta/ir/message.hpp"

namespace rosetta::ir {

enum class FinishReason { stop, length, tool_calls, content_filter, error, other };

constexpr std::string_view finish_reason_name(FinishReason r) {
  switch (r) {
    case FinishReason::stop: return "stop";
    case FinishReason::length: return "length";
    case FinishReason::tool_calls: return "tool_calls";
    case FinishReason::content_filter: return "content_filter";
    case FinishReason::error: return "error";
    case FinishReason::other: return "other";
  }
  return "unknown";
}

inline std::optional<FinishReason> parse_finish_reason(std::string_view s) {
  for (auto r : {FinishReason::stop, FinishReason::length, FinishReason::tool_calls,
                 FinishReason::content_filter, FinishReason::error, FinishReason::other}) {
    if (finish_reason_name(r) == s) return r;
  }
  return std::nullopt;
}

struct UsageInfo {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  std::optional<std::int64_t> reasoning_tokens;
  std::optional<std::int64_t> cached_tokens;

  friend bool operator==(const UsageInfo&, const UsageInfo&) = default;
};

struct ChoiceInfo {
  std::int64_t index = 0;
  AssistantMessage message;
  FinishReason finish_reason = FinishReason::stop;
  Json provider_metadata; // choice-level extras (logprobs, raw finish reason)

  friend bool operator==(const ChoiceInfo&, const ChoiceInfo&) = default;
};

struct IRResponse {
  std::string id;
  std::int64_t created = 0; // Unix epoch seconds; 0 when the source has none
  std::string model;
  std::vector<ChoiceInfo> choices;
  std::optional<UsageInfo> usage;
  Json provider_metadata;

  friend bool operator==(const IRResponse&, const IRResponse&) = default;
};

} // namespace rosetta::ir
