#pragma once

// Terse IR builders for tests.

#include <string>
#include <vector>

#include "rosetta/ir/request.hpp"
#include "rosetta/ir/response.hpp"

namespace tb {

using namespace rosetta;

inline ir::ContentPart text(std::string s) { return ir::TextPart{std::move(s), Json()}; }

inline ir::ContentPart tool_call(std::string id, std::string name, Json input) {
  return ir::ToolCallPart{std::move(id), std::move(name), std::move(input), Json()};
}

inline ir::ContentPart tool_result(std::string id, std::string result_text) {
  ir::ToolResultPart p;
  p.tool_call_id = std::move(id);
  p.content.emplace_back(ir::TextPart{std::move(result_text), Json()});
  return p;
}

inline ir::Message user(std::string s) {
  return ir::UserMessage{{text(std::move(s))}, {}};
}

inline ir::Message assistant(std::string s) {
  return ir::AssistantMessage{{text(std::move(s))}, {}};
}

inline ir::Message tool_msg(std::string id, std::string result_text) {
  return ir::ToolMessage{{tool_result(std::move(id), std::move(result_text))}, {}};
}

inline ir::IRRequest minimal_request(std::string model = "m", std::string prompt = "hi") {
  ir::IRRequest r;
  r.model = std::move(model);
  r.messages.push_back(user(std::move(prompt)));
  return r;
}

inline ir::IRResponse simple_response(std::string answer = "hello") {
  ir::IRResponse r;
  r.id = "resp_1";
  r.created = 1700000000;
  r.model = "m";
  ir::ChoiceInfo c;
  c.index = 0;
  c.message.content.push_back(text(std::move(answer)));
  c.finish_reason = ir::FinishReason::stop;
  r.choices.push_back(std::move(c));
  r.usage = ir::UsageInfo{10, 5, std::nullopt, std::nullopt};
  return r;
}

} // namespace tb
