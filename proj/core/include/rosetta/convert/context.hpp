#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rosetta/ir/format.hpp"
#include "rosetta/ir/response.hpp"
#include "rosetta/ir/stream.hpp"

namespace rosetta::convert {

enum class MetadataMode { strip, preserve };

/// Closed set of warning codes so tests can assert on them.
enum class WarningCode {
  dropped_provider_feature, // source field has no target equivalent
  unmapped_parameter,       // IR field the target cannot express
  unmapped_parameter_defaulted, // target requires a field the IR lacks
  deferred_reorder,         // event reordered to satisfy the grammar
  unsupported_content,      // content part dropped for the target
  foreign_metadata_ignored, // preserve-mode metadata from another provider
  unknown_stream_event,     // provider stream event with no mapping
};

constexpr std::string_view warning_code_name(WarningCode c) {
  switch (c) {
    case WarningCode::dropped_provider_feature: return "DROPPED_PROVIDER_FEATURE";
    case WarningCode::unmapped_parameter: return "UNMAPPED_PARAMETER";
    case WarningCode::unmapped_parameter_defaulted: return "UNMAPPED_PARAMETER_DEFAULTED";
    case WarningCode::deferred_reorder: return "DEFERRED_REORDER";
    case WarningCode::unsupported_content: return "UNSUPPORTED_CONTENT";
    case WarningCode::foreign_metadata_ignored: return "FOREIGN_METADATA_IGNORED";
    case WarningCode::unknown_stream_event: return "UNKNOWN_STREAM_EVENT";
  }
  return "UNKNOWN";
}

struct Warning {
  WarningCode code;
  std::string message;
  std::optional<std::string> json_path;
};

/// Per-conversion mutable state. Contexts are single-use: one conversion
/// (or one stream), then discarded. Warnings are append-only.
class ConversionContext {
public:
  ConversionContext() = default;
  ConversionContext(MetadataMode mode, ir::ProviderFormat source, ir::ProviderFormat target)
      : mode(mode), source_format(source), target_format(target) {}

  MetadataMode mode = MetadataMode::strip;
  ir::ProviderFormat source_format = ir::ProviderFormat::openai_chat;
  ir::ProviderFormat target_format = ir::ProviderFormat::openai_chat;

  // Google omits tool-call ids; synthesized ids map back to names here.
  std::map<std::string, std::string> tool_call_names;

  void warn(WarningCode code, std::string message,
            std::optional<std::string> json_path = std::nullopt) {
    warnings_.push_back({code, std::move(message), std::move(json_path)});
  }

  const std::vector<Warning>& warnings() const { return warnings_; }

  bool preserve() const { return mode == MetadataMode::preserve; }

private:
  std::vector<Warning> warnings_;
};

/// Streaming state on top of ConversionContext: block lifecycle, tool-call
/// argument buffers, deferred finish/usage, and an opaque per-provider
/// cursor (e.g. accumulated text for differencing).
class StreamContext : public ConversionContext {
public:
  using ConversionContext::ConversionContext;

  // --- block lifecycle -----------------------------------------------
  // open_block allocates the next block index and returns the start
  // event(s); tool blocks take id+name and also emit tool_call_start.
  std::vector<ir::StreamEvent> open_block(ir::BlockKind kind, std::int64_t* index_out = nullptr);
  std::vector<ir::StreamEvent> open_tool_block(const std::string& tool_call_id,
                                               const std::string& tool_name,
                                               std::int64_t* index_out = nullptr);
  // Throws errors::ProtocolViolation when the block is not open.
  ir::StreamEvent append_tool_args(std::int64_t block_index, std::string fragment);
  // Closes the block; for tool blocks verifies the accumulated fragments
  // parse as a JSON object (empty accumulation counts as {}).
  std::vector<ir::StreamEvent> close_block(std::int64_t block_index);
  std::vector<ir::StreamEvent> close_all_blocks();

  void defer_usage(ir::UsageInfo usage) { deferred_usage = usage; }
  void defer_finish(ir::FinishReason reason) { deferred_finish = reason; }
  // Emits deferred finish then usage, each exactly once.
  std::vector<ir::StreamEvent> drain_deferred();

  bool has_open_blocks() const { return !open_blocks.empty(); }
  ir::BlockKind open_block_kind(std::int64_t index) const;

  std::int64_t current_block_index = -1; // most recently opened
  std::map<std::int64_t, ir::BlockKind> open_blocks;
  std::map<std::int64_t, std::string> tool_arg_buffers;
  std::optional<ir::UsageInfo> deferred_usage;
  std::optional<ir::FinishReason> deferred_finish;
  std::optional<ir::StreamStart> stream_start; // stashed session metadata
  Json provider_cursor; // opaque per-provider state

private:
  std::int64_t next_block_index_ = 0;
};

} // namespace rosetta::convert
