#include "rosetta/convert/context.hpp"

#include "rosetta/convert/errors.hpp"

namespace rosetta::convert {

std::vector<ir::StreamEvent> StreamContext::open_block(ir::BlockKind kind,
                                                       std::int64_t* index_out) {
  std::int64_t index = next_block_index_++;
  open_blocks[index] = kind;
  current_block_index = index;
  if (index_out) *index_out = index;
  return {ir::ContentBlockStart{index, kind}};
}

std::vector<ir::StreamEvent> StreamContext::open_tool_block(const std::string& tool_call_id,
                                                            const std::string& tool_name,
                                                            std::int64_t* index_out) {
  std::int64_t index = 0;
  auto events = open_block(ir::BlockKind::tool_call, &index);
  tool_call_names[tool_call_id] = tool_name;
  tool_arg_buffers[index] = "";
  events.push_back(ir::ToolCallStart{index, tool_call_id, tool_name});
  if (index_out) *index_out = index;
  return events;
}

ir::StreamEvent StreamContext::append_tool_args(std::int64_t block_index, std::string fragment) {
  auto it = open_blocks.find(block_index);
  if (it == open_blocks.end() || it->second != ir::BlockKind::tool_call) {
    throw errors::ProtocolViolation("tool argument fragment for unopened tool block " +
                                    std::to_string(block_index));
  }
  tool_arg_buffers[block_index] += fragment;
  return ir::ToolCallDelta{block_index, std::move(fragment)};
}

std::vector<ir::StreamEvent> StreamContext::close_block(std::int64_t block_index) {
  auto it = open_blocks.find(block_index);
  if (it == open_blocks.end()) {
    throw errors::ProtocolViolation("close of block " + std::to_string(block_index) +
                                    " which is not open");
  }
  if (it->second == ir::BlockKind::tool_call) {
    auto buf = tool_arg_buffers.find(block_index);
    // Zero fragments means an empty-input call; anything else must parse.
    if (buf != tool_arg_buffers.end() && !buf->second.empty()) {
      auto parsed = Json::parse(buf->second, nullptr, false);
      if (parsed.is_discarded() || !parsed.is_object()) {
        throw errors::ProtocolViolation("tool-call argument buffer for block " +
                                        std::to_string(block_index) +
                                        " is not a parseable JSON object");
      }
    }
    if (buf != tool_arg_buffers.end()) tool_arg_buffers.erase(buf);
  }
  open_blocks.erase(it);
  return {ir::ContentBlockEnd{block_index}};
}

std::vector<ir::StreamEvent> StreamContext::close_all_blocks() {
  std::vector<ir::StreamEvent> events;
  while (!open_blocks.empty()) {
    auto index = open_blocks.begin()->first;
    auto closed = close_block(index);
    events.insert(events.end(), closed.begin(), closed.end());
  }
  return events;
}

std::vector<ir::StreamEvent> StreamContext::drain_deferred() {
  std::vector<ir::StreamEvent> events;
  if (deferred_finish) {
    events.push_back(ir::Finish{*deferred_finish});
    deferred_finish.reset();
  }
  if (deferred_usage) {
    events.push_back(ir::Usage{*deferred_usage});
    deferred_usage.reset();
  }
  return events;
}

ir::BlockKind StreamContext::open_block_kind(std::int64_t index) const {
  auto it = open_blocks.find(index);
  if (it == open_blocks.end()) {
    throw errors::ProtocolViolation("block " + std::to_string(index) + " is not open");
  }
  return it->second;
}

} // namespace rosetta::convert
