#include "rosetta/ir/serde.hpp"

#include "../json_util.hpp"

namespace rosetta::ir {

using jsonutil::fail;
using jsonutil::index_path;
using jsonutil::key_path;
using jsonutil::require_array;
using jsonutil::require_bool;
using jsonutil::require_int;
using jsonutil::require_number;
using jsonutil::require_object;
using jsonutil::require_string;

namespace {

void emit_metadata(Json& out, const Json& provider_metadata) {
  if (!provider_metadata.is_null()) out["provider_metadata"] = provider_metadata;
}

Json source_to_json(const BlobSource& s) {
  Json j = Json::object();
  if (s.kind == BlobSource::Kind::base64) {
    j["kind"] = "base64";
    j["data"] = s.value;
  } else {
    j["kind"] = "url";
    j["url"] = s.value;
  }
  return j;
}

BlobSource source_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  BlobSource s;
  auto kind = require_string(j.value("kind", Json()), key_path(path, "kind"));
  if (kind == "base64") {
    s.kind = BlobSource::Kind::base64;
    s.value = require_string(j.value("data", Json()), key_path(path, "data"));
  } else if (kind == "url") {
    s.kind = BlobSource::Kind::url;
    s.value = require_string(j.value("url", Json()), key_path(path, "url"));
  } else {
    fail("unknown source kind '" + kind + "'", key_path(path, "kind"));
  }
  return s;
}

constexpr std::string_view detail_name(ImageDetail d) {
  switch (d) {
    case ImageDetail::low: return "low";
    case ImageDetail::high: return "high";
    case ImageDetail::auto_: return "auto";
  }
  return "auto";
}

std::optional<ImageDetail> detail_from_name(std::string_view s) {
  if (s == "low") return ImageDetail::low;
  if (s == "high") return ImageDetail::high;
  if (s == "auto") return ImageDetail::auto_;
  return std::nullopt;
}

Json metadata_to_json(const MessageMetadata& m) {
  Json j = Json::object();
  if (m.id) j["id"] = *m.id;
  if (m.timestamp) j["timestamp"] = *m.timestamp;
  if (m.streaming_state) {
    j["streaming_state"] =
        *m.streaming_state == StreamingState::partial ? "partial" : "complete";
  }
  if (m.custom.is_object() && !m.custom.empty()) j["custom"] = m.custom;
  return j;
}

MessageMetadata metadata_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  MessageMetadata m;
  for (const auto& [key, value] : j.items()) {
    if (key == "id") {
      m.id = require_string(value, key_path(path, key));
    } else if (key == "timestamp") {
      m.timestamp = require_int(value, key_path(path, key));
    } else if (key == "streaming_state") {
      auto s = require_string(value, key_path(path, key));
      if (s == "partial") m.streaming_state = StreamingState::partial;
      else if (s == "complete") m.streaming_state = StreamingState::complete;
      else fail("unknown streaming_state '" + s + "'", key_path(path, key));
    } else if (key == "custom") {
      m.custom = require_object(value, key_path(path, key));
    } else {
      fail("unknown metadata field '" + key + "'", key_path(path, key));
    }
  }
  return m;
}

Json tool_result_content_to_json(const std::vector<std::variant<TextPart, ImagePart>>& parts) {
  Json arr = Json::array();
  for (const auto& p : parts) {
    if (std::holds_alternative<TextPart>(p)) {
      arr.push_back(to_json(ContentPart(std::get<TextPart>(p))));
    } else {
      arr.push_back(to_json(ContentPart(std::get<ImagePart>(p))));
    }
  }
  return arr;
}

} // namespace

Json to_json(const ContentPart& part) {
  Json j = Json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TextPart>) {
          j["type"] = "text";
          j["text"] = p.text;
        } else if constexpr (std::is_same_v<T, ImagePart>) {
          j["type"] = "image";
          j["source"] = source_to_json(p.source);
          j["media_type"] = p.media_type;
          if (p.detail) j["detail"] = std::string(detail_name(*p.detail));
        } else if constexpr (std::is_same_v<T, AudioPart>) {
          j["type"] = "audio";
          j["data"] = p.data;
          j["media_type"] = p.media_type;
        } else if constexpr (std::is_same_v<T, FilePart>) {
          j["type"] = "file";
          j["source"] = source_to_json(p.source);
          j["media_type"] = p.media_type;
          if (p.filename) j["filename"] = *p.filename;
        } else if constexpr (std::is_same_v<T, ToolCallPart>) {
          j["type"] = "tool_call";
          j["tool_call_id"] = p.tool_call_id;
          j["tool_name"] = p.tool_name;
          j["tool_input"] = p.tool_input;
        } else if constexpr (std::is_same_v<T, ToolResultPart>) {
          j["type"] = "tool_result";
          j["tool_call_id"] = p.tool_call_id;
          j["content"] = tool_result_content_to_json(p.content);
          if (p.is_error) j["is_error"] = *p.is_error;
        } else if constexpr (std::is_same_v<T, ReasoningPart>) {
          j["type"] = "reasoning";
          j["text"] = p.text;
          if (p.signature) j["signature"] = *p.signature;
        } else if constexpr (std::is_same_v<T, RefusalPart>) {
          j["type"] = "refusal";
          j["reason"] = p.reason;
        } else if constexpr (std::is_same_v<T, CitationPart>) {
          j["type"] = "citation";
          if (p.url) j["url"] = *p.url;
          if (p.quoted_text) j["quoted_text"] = *p.quoted_text;
          if (p.span) j["span"] = Json{{"start", p.span->start}, {"end", p.span->end}};
        }
        emit_metadata(j, p.provider_metadata);
      },
      part);
  return j;
}

namespace {

ContentPart part_from_json_at(const Json& j, const std::string& path) {
  require_object(j, path);
  auto it = j.find("type");
  if (it == j.end()) fail("content part missing 'type' discriminator", path);
  auto type = require_string(*it, key_path(path, "type"));

  Json meta;
  if (auto m = j.find("provider_metadata"); m != j.end()) {
    meta = require_object(*m, key_path(path, "provider_metadata"));
  }

  if (type == "text") {
    TextPart p;
    p.text = require_string(j.value("text", Json()), key_path(path, "text"));
    p.provider_metadata = meta;
    return p;
  }
  if (type == "image") {
    ImagePart p;
    p.source = source_from_json(j.value("source", Json()), key_path(path, "source"));
    p.media_type = require_string(j.value("media_type", Json()), key_path(path, "media_type"));
    if (auto d = j.find("detail"); d != j.end()) {
      auto name = require_string(*d, key_path(path, "detail"));
      auto detail = detail_from_name(name);
      if (!detail) fail("unknown image detail '" + name + "'", key_path(path, "detail"));
      p.detail = detail;
    }
    p.provider_metadata = meta;
    return p;
  }
  if (type == "audio") {
    AudioPart p;
    p.data = require_string(j.value("data", Json()), key_path(path, "data"));
    p.media_type = require_string(j.value("media_type", Json()), key_path(path, "media_type"));
    p.provider_metadata = meta;
    return p;
  }
  if (type == "file") {
    FilePart p;
    p.source = source_from_json(j.value("source", Json()), key_path(path, "source"));
    p.media_type = require_string(j.value("media_type", Json()), key_path(path, "media_type"));
    if (auto f = j.find("filename"); f != j.end()) {
      p.filename = require_string(*f, key_path(path, "filename"));
    }
    p.provider_metadata = meta;
    return p;
  }
  if (type == "tool_call") {
    ToolCallPart p;
    p.tool_call_id = require_string(j.value("tool_call_id", Json()), key_path(path, "tool_call_id"));
    p.tool_name = require_string(j.value("tool_name", Json()), key_path(path, "tool_name"));
    p.tool_input = require_object(j.value("tool_input", Json::object()), key_path(path, "tool_input"));
    p.provider_metadata = meta;
    return p;
  }
  if (type == "tool_result") {
    ToolResultPart p;
    p.tool_call_id = require_string(j.value("tool_call_id", Json()), key_path(path, "tool_call_id"));
    const auto& content = require_array(j.value("content", Json::array()), key_path(path, "content"));
    for (std::size_t i = 0; i < content.size(); ++i) {
      auto inner = part_from_json_at(content[i], index_path(key_path(path, "content"), i));
      if (std::holds_alternative<TextPart>(inner)) {
        p.content.emplace_back(std::get<TextPart>(inner));
      } else if (std::holds_alternative<ImagePart>(inner)) {
        p.content.emplace_back(std::get<ImagePart>(inner));
      } else {
        fail("tool_result content must be text or image parts",
             index_path(key_path(path, "content"), i));
      }
    }
    if (auto e = j.find("is_error"); e != j.end()) {
      p.is_error = require_bool(*e, key_path(path, "is_error"));
    }
    p.provider_metadata = meta;
    return p;
  }
  if (type == "reasoning") {
    ReasoningPart p;
    p.text = require_string(j.value("text", Json()), key_path(path, "text"));
    if (auto s = j.find("signature"); s != j.end()) {
      p.signature = require_string(*s, key_path(path, "signature"));
    }
    p.provider_metadata = meta;
    return p;
  }
  if (type == "refusal") {
    RefusalPart p;
    p.reason = require_string(j.value("reason", Json()), key_path(path, "reason"));
    p.provider_metadata = meta;
    return p;
  }
  if (type == "citation") {
    CitationPart p;
    if (auto u = j.find("url"); u != j.end()) p.url = require_string(*u, key_path(path, "url"));
    if (auto q = j.find("quoted_text"); q != j.end()) {
      p.quoted_text = require_string(*q, key_path(path, "quoted_text"));
    }
    if (auto s = j.find("span"); s != j.end()) {
      const auto& span = require_object(*s, key_path(path, "span"));
      CitationPart::Span sp;
      sp.start = require_int(span.value("start", Json()), key_path(key_path(path, "span"), "start"));
      sp.end = require_int(span.value("end", Json()), key_path(key_path(path, "span"), "end"));
      p.span = sp;
    }
    p.provider_metadata = meta;
    return p;
  }
  fail("unknown content part type '" + type + "'", key_path(path, "type"));
}

Json message_to_json_impl(Role role, const std::vector<ContentPart>& content,
                          const MessageMetadata& metadata) {
  Json j = Json::object();
  j["role"] = std::string(role_name(role));
  Json arr = Json::array();
  for (const auto& part : content) arr.push_back(to_json(part));
  j["content"] = std::move(arr);
  if (!metadata.empty()) j["metadata"] = metadata_to_json(metadata);
  return j;
}

Message message_from_json_at(const Json& j, const std::string& path) {
  require_object(j, path);
  auto role = require_string(j.value("role", Json()), key_path(path, "role"));
  std::vector<ContentPart> parts;
  const auto& content = require_array(j.value("content", Json::array()), key_path(path, "content"));
  for (std::size_t i = 0; i < content.size(); ++i) {
    parts.push_back(part_from_json_at(content[i], index_path(key_path(path, "content"), i)));
  }
  MessageMetadata meta;
  if (auto m = j.find("metadata"); m != j.end()) {
    meta = metadata_from_json(*m, key_path(path, "metadata"));
  }
  if (role == "system") return SystemMessage{std::move(parts), std::move(meta)};
  if (role == "user") return UserMessage{std::move(parts), std::move(meta)};
  if (role == "assistant") return AssistantMessage{std::move(parts), std::move(meta)};
  if (role == "tool") return ToolMessage{std::move(parts), std::move(meta)};
  fail("unknown role '" + role + "'", key_path(path, "role"));
}

} // namespace

Json to_json(const Message& message) {
  return message_to_json_impl(message_role(message), message_content(message),
                              message_metadata(message));
}

Json to_json(const SystemMessage& message) {
  return message_to_json_impl(Role::system, message.content, message.metadata);
}

ContentPart content_part_from_json(const Json& j) { return part_from_json_at(j, "$"); }

Message message_from_json(const Json& j) { return message_from_json_at(j, "$"); }

Json to_json(const ToolDefinition& tool) {
  Json j = Json::object();
  j["name"] = tool.name;
  if (tool.description) j["description"] = *tool.description;
  if (!tool.parameters.is_null()) j["parameters"] = tool.parameters;
  if (tool.tool_type != ToolType::function) j["tool_type"] = "mcp";
  return j;
}

namespace {

ToolDefinition tool_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  ToolDefinition t;
  t.name = require_string(j.value("name", Json()), key_path(path, "name"));
  if (auto d = j.find("description"); d != j.end()) {
    t.description = require_string(*d, key_path(path, "description"));
  }
  if (auto p = j.find("parameters"); p != j.end()) {
    t.parameters = require_object(*p, key_path(path, "parameters"));
  }
  if (auto ty = j.find("tool_type"); ty != j.end()) {
    auto name = require_string(*ty, key_path(path, "tool_type"));
    if (name == "function") t.tool_type = ToolType::function;
    else if (name == "mcp") t.tool_type = ToolType::mcp;
    else fail("unknown tool_type '" + name + "'", key_path(path, "tool_type"));
  }
  return t;
}

Json tool_choice_to_json(const ToolChoice& tc) {
  Json j = Json::object();
  j["mode"] = std::string(tool_choice_mode_name(tc.mode));
  if (tc.tool_name) j["tool_name"] = *tc.tool_name;
  return j;
}

ToolChoice tool_choice_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  ToolChoice tc;
  auto mode = require_string(j.value("mode", Json()), key_path(path, "mode"));
  if (mode == "none") tc.mode = ToolChoice::Mode::none;
  else if (mode == "auto") tc.mode = ToolChoice::Mode::auto_;
  else if (mode == "any") tc.mode = ToolChoice::Mode::any;
  else if (mode == "tool") tc.mode = ToolChoice::Mode::tool;
  else fail("unknown tool_choice mode '" + mode + "'", key_path(path, "mode"));
  if (auto n = j.find("tool_name"); n != j.end()) {
    tc.tool_name = require_string(*n, key_path(path, "tool_name"));
  }
  return tc;
}

} // namespace

Json to_json(const GenerationConfig& config) {
  Json j = Json::object();
  if (config.temperature) j["temperature"] = *config.temperature;
  if (config.top_p) j["top_p"] = *config.top_p;
  if (config.top_k) j["top_k"] = *config.top_k;
  if (config.max_tokens) j["max_tokens"] = *config.max_tokens;
  if (config.stop_sequences) j["stop_sequences"] = *config.stop_sequences;
  if (config.frequency_penalty) j["frequency_penalty"] = *config.frequency_penalty;
  if (config.presence_penalty) j["presence_penalty"] = *config.presence_penalty;
  if (!config.logit_bias.is_null()) j["logit_bias"] = config.logit_bias;
  if (config.seed) j["seed"] = *config.seed;
  if (config.logprobs) {
    Json lp = Json::object();
    lp["enabled"] = config.logprobs->enabled;
    if (config.logprobs->top_logprobs) lp["top_logprobs"] = *config.logprobs->top_logprobs;
    j["logprobs"] = std::move(lp);
  }
  return j;
}

namespace {

GenerationConfig generation_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  GenerationConfig g;
  for (const auto& [key, value] : j.items()) {
    auto p = key_path(path, key);
    if (key == "temperature") g.temperature = require_number(value, p);
    else if (key == "top_p") g.top_p = require_number(value, p);
    else if (key == "top_k") g.top_k = require_int(value, p);
    else if (key == "max_tokens") g.max_tokens = require_int(value, p);
    else if (key == "stop_sequences") {
      require_array(value, p);
      std::vector<std::string> stops;
      for (std::size_t i = 0; i < value.size(); ++i) {
        stops.push_back(require_string(value[i], index_path(p, i)));
      }
      g.stop_sequences = std::move(stops);
    } else if (key == "frequency_penalty") g.frequency_penalty = require_number(value, p);
    else if (key == "presence_penalty") g.presence_penalty = require_number(value, p);
    else if (key == "logit_bias") g.logit_bias = require_object(value, p);
    else if (key == "seed") g.seed = require_int(value, p);
    else if (key == "logprobs") {
      require_object(value, p);
      LogprobsConfig lp;
      lp.enabled = require_bool(value.value("enabled", Json()), key_path(p, "enabled"));
      if (auto t = value.find("top_logprobs"); t != value.end()) {
        lp.top_logprobs = require_int(*t, key_path(p, "top_logprobs"));
      }
      g.logprobs = lp;
    } else {
      fail("unknown generation field '" + key + "'", p);
    }
  }
  return g;
}

Json reasoning_to_json(const ReasoningConfig& r) {
  Json j = Json::object();
  if (r.enabled) j["enabled"] = *r.enabled;
  if (r.effort) j["effort"] = std::string(reasoning_effort_name(*r.effort));
  if (r.budget_tokens) j["budget_tokens"] = *r.budget_tokens;
  return j;
}

ReasoningConfig reasoning_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  ReasoningConfig r;
  for (const auto& [key, value] : j.items()) {
    auto p = key_path(path, key);
    if (key == "enabled") r.enabled = require_bool(value, p);
    else if (key == "effort") {
      auto name = require_string(value, p);
      if (name == "low") r.effort = ReasoningEffort::low;
      else if (name == "medium") r.effort = ReasoningEffort::medium;
      else if (name == "high") r.effort = ReasoningEffort::high;
      else fail("unknown effort '" + name + "'", p);
    } else if (key == "budget_tokens") r.budget_tokens = require_int(value, p);
    else fail("unknown reasoning field '" + key + "'", p);
  }
  return r;
}

Json response_format_to_json(const ResponseFormatConfig& rf) {
  Json j = Json::object();
  j["kind"] = std::string(response_format_kind_name(rf.kind));
  if (!rf.schema.is_null()) j["schema"] = rf.schema;
  if (rf.schema_name) j["schema_name"] = *rf.schema_name;
  return j;
}

ResponseFormatConfig response_format_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  ResponseFormatConfig rf;
  auto kind = require_string(j.value("kind", Json()), key_path(path, "kind"));
  if (kind == "text") rf.kind = ResponseFormatConfig::Kind::text;
  else if (kind == "json_object") rf.kind = ResponseFormatConfig::Kind::json_object;
  else if (kind == "json_schema") rf.kind = ResponseFormatConfig::Kind::json_schema;
  else fail("unknown response format kind '" + kind + "'", key_path(path, "kind"));
  if (auto s = j.find("schema"); s != j.end()) {
    rf.schema = require_object(*s, key_path(path, "schema"));
  }
  if (auto n = j.find("schema_name"); n != j.end()) {
    rf.schema_name = require_string(*n, key_path(path, "schema_name"));
  }
  return rf;
}

} // namespace

Json to_json(const IRRequest& request) {
  Json j = Json::object();
  j["model"] = request.model;
  Json msgs = Json::array();
  for (const auto& m : request.messages) msgs.push_back(to_json(m));
  j["messages"] = std::move(msgs);
  if (request.system) j["system"] = to_json(*request.system);
  if (request.tools) {
    Json tools = Json::array();
    for (const auto& t : *request.tools) tools.push_back(to_json(t));
    j["tools"] = std::move(tools);
  }
  if (request.tool_choice) j["tool_choice"] = tool_choice_to_json(*request.tool_choice);
  if (request.tool_call_config && request.tool_call_config->parallel_tool_calls) {
    j["tool_call_config"] =
        Json{{"parallel_tool_calls", *request.tool_call_config->parallel_tool_calls}};
  }
  if (request.generation && !request.generation->empty()) {
    j["generation"] = to_json(*request.generation);
  }
  if (request.response_format) j["response_format"] = response_format_to_json(*request.response_format);
  if (request.stream) {
    Json s = Json::object();
    s["enabled"] = request.stream->enabled;
    if (request.stream->include_usage) s["include_usage"] = *request.stream->include_usage;
    j["stream"] = std::move(s);
  }
  if (request.reasoning && !request.reasoning->empty()) {
    j["reasoning"] = reasoning_to_json(*request.reasoning);
  }
  if (!request.cache.is_null()) j["cache"] = request.cache;
  if (!request.provider_extensions.is_null()) j["provider_extensions"] = request.provider_extensions;
  return j;
}

IRRequest request_from_json(const Json& j) {
  const std::string path = "$";
  require_object(j, path);
  IRRequest r;
  for (const auto& [key, value] : j.items()) {
    auto p = key_path(path, key);
    if (key == "model") r.model = require_string(value, p);
    else if (key == "messages") {
      require_array(value, p);
      for (std::size_t i = 0; i < value.size(); ++i) {
        r.messages.push_back(message_from_json_at(value[i], index_path(p, i)));
      }
    } else if (key == "system") {
      auto m = message_from_json_at(value, p);
      if (!std::holds_alternative<SystemMessage>(m)) fail("system must have role system", p);
      r.system = std::get<SystemMessage>(m);
    } else if (key == "tools") {
      require_array(value, p);
      std::vector<ToolDefinition> tools;
      for (std::size_t i = 0; i < value.size(); ++i) {
        tools.push_back(tool_from_json(value[i], index_path(p, i)));
      }
      r.tools = std::move(tools);
    } else if (key == "tool_choice") {
      r.tool_choice = tool_choice_from_json(value, p);
    } else if (key == "tool_call_config") {
      require_object(value, p);
      ToolCallConfig tcc;
      if (auto pt = value.find("parallel_tool_calls"); pt != value.end()) {
        tcc.parallel_tool_calls = require_bool(*pt, key_path(p, "parallel_tool_calls"));
      }
      r.tool_call_config = tcc;
    } else if (key == "generation") {
      r.generation = generation_from_json(value, p);
    } else if (key == "response_format") {
      r.response_format = response_format_from_json(value, p);
    } else if (key == "stream") {
      require_object(value, p);
      StreamConfig sc;
      sc.enabled = require_bool(value.value("enabled", Json()), key_path(p, "enabled"));
      if (auto u = value.find("include_usage"); u != value.end()) {
        sc.include_usage = require_bool(*u, key_path(p, "include_usage"));
      }
      r.stream = sc;
    } else if (key == "reasoning") {
      r.reasoning = reasoning_from_json(value, p);
    } else if (key == "cache") {
      r.cache = require_object(value, p);
    } else if (key == "provider_extensions") {
      r.provider_extensions = require_object(value, p);
    } else {
      fail("unknown request field '" + key + "'", p);
    }
  }
  return r;
}

Json to_json(const UsageInfo& usage) {
  Json j = Json::object();
  j["prompt_tokens"] = usage.prompt_tokens;
  j["completion_tokens"] = usage.completion_tokens;
  if (usage.reasoning_tokens) j["reasoning_tokens"] = *usage.reasoning_tokens;
  if (usage.cached_tokens) j["cached_tokens"] = *usage.cached_tokens;
  return j;
}

namespace {

UsageInfo usage_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  UsageInfo u;
  for (const auto& [key, value] : j.items()) {
    auto p = key_path(path, key);
    if (key == "prompt_tokens") u.prompt_tokens = require_int(value, p);
    else if (key == "completion_tokens") u.completion_tokens = require_int(value, p);
    else if (key == "reasoning_tokens") u.reasoning_tokens = require_int(value, p);
    else if (key == "cached_tokens") u.cached_tokens = require_int(value, p);
    else fail("unknown usage field '" + key + "'", p);
  }
  return u;
}

} // namespace

Json to_json(const IRResponse& response) {
  Json j = Json::object();
  j["id"] = response.id;
  j["created"] = response.created;
  j["model"] = response.model;
  Json choices = Json::array();
  for (const auto& c : response.choices) {
    Json cj = Json::object();
    cj["index"] = c.index;
    cj["message"] = message_to_json_impl(Role::assistant, c.message.content, c.message.metadata);
    cj["finish_reason"] = std::string(finish_reason_name(c.finish_reason));
    if (!c.provider_metadata.is_null()) cj["provider_metadata"] = c.provider_metadata;
    choices.push_back(std::move(cj));
  }
  j["choices"] = std::move(choices);
  if (response.usage) j["usage"] = to_json(*response.usage);
  if (!response.provider_metadata.is_null()) j["provider_metadata"] = response.provider_metadata;
  return j;
}

IRResponse response_from_json(const Json& j) {
  const std::string path = "$";
  require_object(j, path);
  IRResponse r;
  for (const auto& [key, value] : j.items()) {
    auto p = key_path(path, key);
    if (key == "id") r.id = require_string(value, p);
    else if (key == "created") r.created = require_int(value, p);
    else if (key == "model") r.model = require_string(value, p);
    else if (key == "choices") {
      require_array(value, p);
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& cj = require_object(value[i], index_path(p, i));
        ChoiceInfo c;
        c.index = require_int(cj.value("index", Json()), key_path(index_path(p, i), "index"));
        auto m = message_from_json_at(cj.value("message", Json()),
                                      key_path(index_path(p, i), "message"));
        if (!std::holds_alternative<AssistantMessage>(m)) {
          fail("choice message must have role assistant", key_path(index_path(p, i), "message"));
        }
        c.message = std::get<AssistantMessage>(m);
        auto fr = require_string(cj.value("finish_reason", Json()),
                                 key_path(index_path(p, i), "finish_reason"));
        auto reason = parse_finish_reason(fr);
        if (!reason) fail("unknown finish_reason '" + fr + "'",
                          key_path(index_path(p, i), "finish_reason"));
        c.finish_reason = *reason;
        if (auto pm = cj.find("provider_metadata"); pm != cj.end()) {
          c.provider_metadata = require_object(*pm, key_path(index_path(p, i), "provider_metadata"));
        }
        r.choices.push_back(std::move(c));
      }
    } else if (key == "usage") {
      r.usage = usage_from_json(value, p);
    } else if (key == "provider_metadata") {
      r.provider_metadata = require_object(value, p);
    } else {
      fail("unknown response field '" + key + "'", p);
    }
  }
  return r;
}

Json to_json(const StreamEvent& event) {
  Json j = Json::object();
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, StreamStart>) {
          j["type"] = "stream_start";
          j["response_id"] = e.response_id;
          j["model"] = e.model;
          j["created"] = e.created;
        } else if constexpr (std::is_same_v<T, StreamEnd>) {
          j["type"] = "stream_end";
        } else if constexpr (std::is_same_v<T, ContentBlockStart>) {
          j["type"] = "content_block_start";
          j["block_index"] = e.block_index;
          j["block_kind"] = std::string(block_kind_name(e.block_kind));
        } else if constexpr (std::is_same_v<T, ContentBlockEnd>) {
          j["type"] = "content_block_end";
          j["block_index"] = e.block_index;
        } else if constexpr (std::is_same_v<T, TextDelta>) {
          j["type"] = "text_delta";
          j["block_index"] = e.block_index;
          j["text"] = e.text;
        } else if constexpr (std::is_same_v<T, ReasoningDelta>) {
          j["type"] = "reasoning_delta";
          j["block_index"] = e.block_index;
          j["text"] = e.text;
        } else if constexpr (std::is_same_v<T, ToolCallStart>) {
          j["type"] = "tool_call_start";
          j["block_index"] = e.block_index;
          j["tool_call_id"] = e.tool_call_id;
          j["tool_name"] = e.tool_name;
        } else if constexpr (std::is_same_v<T, ToolCallDelta>) {
          j["type"] = "tool_call_delta";
          j["block_index"] = e.block_index;
          j["arguments_fragment"] = e.arguments_fragment;
        } else if constexpr (std::is_same_v<T, Finish>) {
          j["type"] = "finish";
          j["finish_reason"] = std::string(finish_reason_name(e.finish_reason));
        } else if constexpr (std::is_same_v<T, Usage>) {
          j["type"] = "usage";
          j["usage"] = to_json(e.usage);
        }
      },
      event);
  return j;
}

Json to_json(std::span<const StreamEvent> events) {
  Json arr = Json::array();
  for (const auto& e : events) arr.push_back(to_json(e));
  return arr;
}

StreamEvent stream_event_from_json(const Json& j) {
  const std::string path = "$";
  require_object(j, path);
  auto type = require_string(j.value("type", Json()), key_path(path, "type"));
  auto block_index = [&]() {
    return require_int(j.value("block_index", Json()), key_path(path, "block_index"));
  };
  if (type == "stream_start") {
    StreamStart e;
    e.response_id = require_string(j.value("response_id", Json()), key_path(path, "response_id"));
    e.model = require_string(j.value("model", Json()), key_path(path, "model"));
    e.created = require_int(j.value("created", Json()), key_path(path, "created"));
    return e;
  }
  if (type == "stream_end") return StreamEnd{};
  if (type == "content_block_start") {
    ContentBlockStart e;
    e.block_index = block_index();
    auto kind = require_string(j.value("block_kind", Json()), key_path(path, "block_kind"));
    if (kind == "text") e.block_kind = BlockKind::text;
    else if (kind == "tool_call") e.block_kind = BlockKind::tool_call;
    else if (kind == "reasoning") e.block_kind = BlockKind::reasoning;
    else fail("unknown block_kind '" + kind + "'", key_path(path, "block_kind"));
    return e;
  }
  if (type == "content_block_end") return ContentBlockEnd{block_index()};
  if (type == "text_delta") {
    return TextDelta{block_index(),
                     require_string(j.value("text", Json()), key_path(path, "text"))};
  }
  if (type == "reasoning_delta") {
    return ReasoningDelta{block_index(),
                          require_string(j.value("text", Json()), key_path(path, "text"))};
  }
  if (type == "tool_call_start") {
    ToolCallStart e;
    e.block_index = block_index();
    e.tool_call_id = require_string(j.value("tool_call_id", Json()), key_path(path, "tool_call_id"));
    e.tool_name = require_string(j.value("tool_name", Json()), key_path(path, "tool_name"));
    return e;
  }
  if (type == "tool_call_delta") {
    return ToolCallDelta{block_index(), require_string(j.value("arguments_fragment", Json()),
                                                       key_path(path, "arguments_fragment"))};
  }
  if (type == "finish") {
    auto fr = require_string(j.value("finish_reason", Json()), key_path(path, "finish_reason"));
    auto reason = parse_finish_reason(fr);
    if (!reason) fail("unknown finish_reason '" + fr + "'", key_path(path, "finish_reason"));
    return Finish{*reason};
  }
  if (type == "usage") {
    return Usage{usage_from_json(j.value("usage", Json()), key_path(path, "usage"))};
  }
  fail("unknown stream event type '" + type + "'", key_path(path, "type"));
}

std::vector<StreamEvent> stream_events_from_json(const Json& j) {
  require_array(j, "$");
  std::vector<StreamEvent> events;
  for (const auto& e : j) events.push_back(stream_event_from_json(e));
  return events;
}

} // namespace rosetta::ir
