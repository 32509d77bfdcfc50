#include "rosetta/ir/validate.hpp"

#include <set>
#include <sstream>

namespace rosetta::ir {

namespace {

std::string idx(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

// Full role-by-part matrix. Rows not forced by the spec's constraints are
// fixed here: system is text-only; user carries input media; assistant
// carries model output (images included, for providers that emit them);
// tool messages carry results only.
constexpr bool kRolePartMatrix[4][9] = {
    // text  image audio file  call  result reason refuse cite
    {true, false, false, false, false, false, false, false, false}, // system
    {true, true, true, true, false, false, false, false, false},    // user
    {true, true, false, false, true, false, true, true, true},      // assistant
    {false, false, false, false, false, true, false, false, false}, // tool
};

class Collector {
public:
  void add(std::string path, std::string message) {
    report_.violations.push_back({std::move(path), std::move(message)});
  }
  ValidationReport take() { return std::move(report_); }

private:
  ValidationReport report_;
};

void check_parts(const std::vector<ContentPart>& content, Role role, const std::string& path,
                 Collector& out) {
  for (std::size_t i = 0; i < content.size(); ++i) {
    const auto& part = content[i];
    auto part_path = idx(path + ".content", i);
    auto kind = part_kind(part);
    if (!part_allowed_in_role(role, kind)) {
      out.add(part_path, std::string(part_kind_name(kind)) +
                             " part not allowed in " + std::string(role_name(role)) +
                             " message (role-constrained content)");
    }
    if (const auto* tr = std::get_if<ToolResultPart>(&part)) {
      if (tr->tool_call_id.empty()) {
        out.add(part_path + ".tool_call_id", "tool_call_id must be non-empty");
      }
    }
    if (const auto* tc = std::get_if<ToolCallPart>(&part)) {
      if (!tc->tool_input.is_object()) {
        out.add(part_path + ".tool_input", "tool_input must be a JSON object");
      }
      if (tc->tool_call_id.empty()) {
        out.add(part_path + ".tool_call_id", "tool_call_id must be non-empty");
      }
    }
  }
}

void check_message(const Message& message, const std::string& path, Collector& out) {
  auto role = message_role(message);
  const auto& content = message_content(message);
  if ((role == Role::user || role == Role::tool) && content.empty()) {
    out.add(path + ".content",
            std::string(role_name(role)) + " message content must be non-empty");
  }
  check_parts(content, role, path, out);
}

void check_generation(const GenerationConfig& g, const std::string& path, Collector& out) {
  if (g.temperature && *g.temperature < 0) {
    out.add(path + ".temperature", "temperature must be >= 0");
  }
  if (g.top_p && (*g.top_p < 0 || *g.top_p > 1)) {
    out.add(path + ".top_p", "top_p must be in [0,1]");
  }
  if (g.top_k && *g.top_k <= 0) out.add(path + ".top_k", "top_k must be positive");
  if (g.max_tokens && *g.max_tokens <= 0) {
    out.add(path + ".max_tokens", "max_tokens must be positive");
  }
  if (g.logprobs && g.logprobs->top_logprobs && *g.logprobs->top_logprobs < 0) {
    out.add(path + ".logprobs.top_logprobs", "top_logprobs must be >= 0");
  }
  if (!g.logit_bias.is_null() && !g.logit_bias.is_object()) {
    out.add(path + ".logit_bias", "logit_bias must be an object");
  }
}

} // namespace

bool part_allowed_in_role(Role role, PartKind kind) {
  return kRolePartMatrix[static_cast<int>(role)][static_cast<int>(kind)];
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) os << v.json_path << ": " << v.message << "\n";
  return os.str();
}

ValidationReport validate_ir_request(const IRRequest& request) {
  Collector out;
  if (request.model.empty()) out.add("$.model", "model must be non-empty");
  if (request.messages.empty()) out.add("$.messages", "messages must be non-empty (non-empty required)");

  if (request.system) {
    check_parts(request.system->content, Role::system, "$.system", out);
    if (!request.messages.empty() &&
        std::holds_alternative<SystemMessage>(request.messages.front())) {
      out.add("$.messages[0]",
              "system instruction lives in the dedicated field, not duplicated at the head of messages");
    }
  }

  for (std::size_t i = 0; i < request.messages.size(); ++i) {
    check_message(request.messages[i], idx("$.messages", i), out);
  }

  // Tool-call pairing: an assistant tool call must be answered by a later
  // tool message unless the conversation ends on that assistant turn.
  std::set<std::string> answered;
  for (const auto& m : request.messages) {
    if (const auto* tool = std::get_if<ToolMessage>(&m)) {
      for (const auto& part : tool->content) {
        if (const auto* tr = std::get_if<ToolResultPart>(&part)) answered.insert(tr->tool_call_id);
      }
    }
  }
  for (std::size_t i = 0; i < request.messages.size(); ++i) {
    const auto* assistant = std::get_if<AssistantMessage>(&request.messages[i]);
    if (!assistant) continue;
    for (std::size_t p = 0; p < assistant->content.size(); ++p) {
      const auto* call = std::get_if<ToolCallPart>(&assistant->content[p]);
      if (!call) continue;
      bool is_last_message = i + 1 == request.messages.size();
      if (!answered.count(call->tool_call_id) && !is_last_message) {
        out.add(idx(idx("$.messages", i) + ".content", p),
                "tool call '" + call->tool_call_id +
                    "' has no matching tool result and the request does not end on this turn");
      }
    }
  }

  if (request.tools) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < request.tools->size(); ++i) {
      const auto& tool = (*request.tools)[i];
      auto path = idx("$.tools", i);
      if (tool.name.empty()) out.add(path + ".name", "tool name must be non-empty");
      if (!names.insert(tool.name).second) {
        out.add(path + ".name", "tool name '" + tool.name + "' duplicated in tool list");
      }
      if (!tool.parameters.is_null()) {
        if (!tool.parameters.is_object() || tool.parameters.value("type", "") != "object") {
          out.add(path + ".parameters", "parameters must be a JSON Schema with top-level type object");
        }
      }
    }
    if (request.tool_choice && request.tool_choice->mode == ToolChoice::Mode::tool) {
      if (!request.tool_choice->tool_name) {
        out.add("$.tool_choice.tool_name", "tool_name required when mode is tool");
      } else if (!names.count(*request.tool_choice->tool_name)) {
        out.add("$.tool_choice.tool_name",
                "tool_name '" + *request.tool_choice->tool_name + "' not present in tools");
      }
    }
  } else if (request.tool_choice && request.tool_choice->mode == ToolChoice::Mode::tool) {
    out.add("$.tool_choice", "tool_choice mode tool requires a tools list");
  }
  if (request.tool_choice && request.tool_choice->mode != ToolChoice::Mode::tool &&
      request.tool_choice->tool_name) {
    out.add("$.tool_choice.tool_name", "tool_name only valid when mode is tool");
  }

  if (request.generation) check_generation(*request.generation, "$.generation", out);
  if (request.reasoning && request.reasoning->budget_tokens &&
      *request.reasoning->budget_tokens <= 0) {
    out.add("$.reasoning.budget_tokens", "budget_tokens must be positive");
  }
  if (request.response_format) {
    bool has_schema = !request.response_format->schema.is_null();
    bool wants_schema = request.response_format->kind == ResponseFormatConfig::Kind::json_schema;
    if (wants_schema != has_schema) {
      out.add("$.response_format.schema",
              wants_schema ? "schema required when kind is json_schema"
                           : "schema only valid when kind is json_schema");
    }
  }
  if (!request.cache.is_null() && !request.cache.is_object()) {
    out.add("$.cache", "cache must be an object");
  }
  if (!request.provider_extensions.is_null() && !request.provider_extensions.is_object()) {
    out.add("$.provider_extensions", "provider_extensions must be an object");
  }
  return out.take();
}

ValidationReport validate_ir_response(const IRResponse& response) {
  Collector out;
  if (response.choices.empty()) out.add("$.choices", "choices must be non-empty");
  for (std::size_t i = 0; i < response.choices.size(); ++i) {
    const auto& c = response.choices[i];
    auto path = idx("$.choices", i);
    if (c.index != static_cast<std::int64_t>(i)) {
      out.add(path + ".index", "choice indices must be contiguous from 0 (contiguous indices)");
    }
    check_parts(c.message.content, Role::assistant, path + ".message", out);
  }
  if (response.usage) {
    if (response.usage->prompt_tokens < 0) {
      out.add("$.usage.prompt_tokens", "token counts must be non-negative");
    }
    if (response.usage->completion_tokens < 0) {
      out.add("$.usage.completion_tokens", "token counts must be non-negative");
    }
    if (response.usage->reasoning_tokens && *response.usage->reasoning_tokens < 0) {
      out.add("$.usage.reasoning_tokens", "token counts must be non-negative");
    }
    if (response.usage->cached_tokens && *response.usage->cached_tokens < 0) {
      out.add("$.usage.cached_tokens", "token counts must be non-negative");
    }
  }
  return out.take();
}

} // namespace rosetta::ir
