#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rosetta/ir/response.hpp"

namespace rosetta::ir {

enum class BlockKind { text, tool_call, reasoning };

constexpr std::string_view block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::text: return "text";
    case BlockKind::tool_call: return "tool_call";
    case BlockKind::reasoning: return "reasoning";
  }
  return "unknown";
}

struct StreamStart {
  std::string response_id;
  std::string model;
  std::int64_t created = 0;
  friend bool operator==(const StreamStart&, const StreamStart&) = default;
};

struct StreamEnd {
  friend bool operator==(const StreamEnd&, const StreamEnd&) = default;
};

struct ContentBlockStart {
  std::int64_t block_index = 0;
  BlockKind block_kind = BlockKind::text;
  friend bool operator==(const ContentBlockStart&, const ContentBlockStart&) = default;
};

struct ContentBlockEnd {
  std::int64_t block_index = 0;
  friend bool operator==(const ContentBlockEnd&, const ContentBlockEnd&) = default;
};

struct TextDelta {
  std::int64_t block_index = 0;
  std::string text;
  friend bool operator==(const TextDelta&, const TextDelta&) = default;
};

struct ReasoningDelta {
  std::int64_t block_index = 0;
  std::string text;
  friend bool operator==(const ReasoningDelta&, const ReasoningDelta&) = default;
};

struct ToolCallStart {
  std::int64_t block_index = 0;
  std::string tool_call_id;
  std::string tool_name;
  friend bool operator==(const ToolCallStart&, const ToolCallStart&) = default;
};

struct ToolCallDelta {
  std::int64_t block_index = 0;
  std::string arguments_fragment; // JSON fragment; concatenation parses
  friend bool operator==(const ToolCallDelta&, const ToolCallDelta&) = default;
};

struct Finish {
  FinishReason finish_reason = FinishReason::stop;
  friend bool operator==(const Finish&, const Finish&) = default;
};

struct Usage {
  UsageInfo usage;
  friend bool operator==(const Usage&, const Usage&) = default;
};

/// The ten normalized stream event kinds shared by all providers.
using StreamEvent = std::variant<StreamStart, StreamEnd, ContentBlockStart,
                                 ContentBlockEnd, TextDelta, ReasoningDelta,
                                 ToolCallStart, ToolCallDelta, Finish, Usage>;

enum class StreamEventKind {
  stream_start,
  stream_end,
  content_block_start,
  content_block_end,
  text_delta,
  reasoning_delta,
  tool_call_start,
  tool_call_delta,
  finish,
  usage,
};

constexpr std::string_view stream_event_kind_name(StreamEventKind k) {
  switch (k) {
    case StreamEventKind::stream_start: return "stream_start";
    case StreamEventKind::stream_end: return "stream_end";
    case StreamEventKind::content_block_start: return "content_block_start";
    case StreamEventKind::content_block_end: return "content_block_end";
    case StreamEventKind::text_delta: return "text_delta";
    case StreamEventKind::reasoning_delta: return "reasoning_delta";
    case StreamEventKind::tool_call_start: return "tool_call_start";
    case StreamEventKind::tool_call_delta: return "tool_call_delta";
    case StreamEventKind::finish: return "finish";
    case StreamEventKind::usage: return "usage";
  }
  return "unknown";
}

inline StreamEventKind stream_event_kind(const StreamEvent& e) {
  return static_cast<StreamEventKind>(e.index());
}

} // namespace rosetta::ir
