#include "rosetta/ir/reassemble.hpp"

#include <map>

#include "rosetta/convert/errors.hpp"

namespace rosetta::ir {

IRResponse assemble_response(std::span<const StreamEvent> events) {
  IRResponse response;
  response.choices.emplace_back();
  auto& choice = response.choices.front();

  struct BlockState {
    BlockKind kind;
    std::string text;       // text or reasoning accumulation
    std::string args;       // tool argument fragments
    std::string tool_id;
    std::string tool_name;
  };
  std::map<std::int64_t, BlockState> blocks;
  std::vector<std::int64_t> order;

  auto open_block = [&](std::int64_t index) -> BlockState& {
    auto it = blocks.find(index);
    if (it == blocks.end()) {
      throw errors::ProtocolViolation("delta for unopened block " + std::to_string(index));
    }
    return it->second;
  };

  for (const auto& event : events) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, StreamStart>) {
            response.id = e.response_id;
            response.model = e.model;
            response.created = e.created;
          } else if constexpr (std::is_same_v<T, ContentBlockStart>) {
            if (blocks.count(e.block_index)) {
              throw errors::ProtocolViolation("block " + std::to_string(e.block_index) +
                                              " opened twice");
            }
            blocks[e.block_index] = BlockState{e.block_kind, "", "", "", ""};
            order.push_back(e.block_index);
          } else if constexpr (std::is_same_v<T, TextDelta>) {
            open_block(e.block_index).text += e.text;
          } else if constexpr (std::is_same_v<T, ReasoningDelta>) {
            open_block(e.block_index).text += e.text;
          } else if constexpr (std::is_same_v<T, ToolCallStart>) {
            auto& b = open_block(e.block_index);
            b.tool_id = e.tool_call_id;
            b.tool_name = e.tool_name;
          } else if constexpr (std::is_same_v<T, ToolCallDelta>) {
            open_block(e.block_index).args += e.arguments_fragment;
          } else if constexpr (std::is_same_v<T, Finish>) {
            choice.finish_reason = e.finish_reason;
          } else if constexpr (std::is_same_v<T, Usage>) {
            response.usage = e.usage;
          }
          // ContentBlockEnd and StreamEnd need no bookkeeping here; the
          // grammar checker owns lifecycle validation.
        },
        event);
  }

  for (auto index : order) {
    auto& b = blocks[index];
    switch (b.kind) {
      case BlockKind::text:
        choice.message.content.emplace_back(TextPart{b.text, Json()});
        break;
      case BlockKind::reasoning:
        choice.message.content.emplace_back(ReasoningPart{b.text, std::nullopt, Json()});
        break;
      case BlockKind::tool_call: {
        Json input = Json::object();
        if (!b.args.empty()) {
          input = Json::parse(b.args, nullptr, false);
          if (input.is_discarded() || !input.is_object()) {
            throw errors::ProtocolViolation("tool-call fragments for block " +
                                            std::to_string(index) +
                                            " do not form a JSON object");
          }
        }
        choice.message.content.emplace_back(
            ToolCallPart{b.tool_id, b.tool_name, std::move(input), Json()});
        break;
      }
    }
  }
  return response;
}

std::string assemble_text(std::span<const StreamEvent> events) {
  std::string out;
  for (const auto& event : events) {
    if (const auto* d = std::get_if<TextDelta>(&event)) out += d->text;
  }
  return out;
}

} // namespace rosetta::ir
