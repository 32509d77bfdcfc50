#include "rosetta/providers/openai_chat.hpp"

#include <algorithm>

#include "common.hpp"

namespace rosetta::providers {

namespace {

namespace ju = jsonutil;
using convert::ConversionContext;
using convert::FieldMap;
using convert::StreamContext;
using convert::WarningCode;
using ju::key_path;
using ju::require_array;
using ju::require_bool;
using ju::require_int;
using ju::require_number;
using ju::require_object;
using ju::require_string;

constexpr auto kFmt = ir::ProviderFormat::openai_chat;

// ------------------------------------------------------------------
// finish_reason mapping
// ------------------------------------------------------------------

ir::FinishReason finish_from_chat(const std::string& raw, Json& choice_meta,
                                  ConversionContext& ctx, const std::string& path) {
  if (raw == "stop") return ir::FinishReason::stop;
  if (raw == "length") return ir::FinishReason::length;
  if (raw == "tool_calls") return ir::FinishReason::tool_calls;
  if (raw == "content_filter") return ir::FinishReason::content_filter;
  if (ctx.preserve()) {
    convert::set_metadata_entry(choice_meta, kFmt, "finish_reason_raw", raw);
  } else {
    ctx.warn(WarningCode::dropped_provider_feature,
             "finish_reason '" + raw + "' mapped to other", path);
  }
  return ir::FinishReason::other;
}

std::string finish_to_chat(ir::FinishReason reason, const Json& choice_meta,
                           ConversionContext& ctx) {
  if (const auto* raw = convert::metadata_entry(choice_meta, kFmt, "finish_reason_raw")) {
    if (raw->is_string()) return raw->get<std::string>();
  }
  switch (reason) {
    case ir::FinishReason::stop: return "stop";
    case ir::FinishReason::length: return "length";
    case ir::FinishReason::tool_calls: return "tool_calls";
    case ir::FinishReason::content_filter: return "content_filter";
    case ir::FinishReason::error:
    case ir::FinishReason::other:
      ctx.warn(WarningCode::unmapped_parameter,
               "finish_reason '" + std::string(ir::finish_reason_name(reason)) +
                   "' emitted as stop");
      return "stop";
  }
  return "stop";
}

// ------------------------------------------------------------------
// ContentOps
// ------------------------------------------------------------------

class ChatContentOps : public convert::ContentOps {
public:
  std::vector<ir::ContentPart> parts_from_provider(const Json& content, ir::Role role,
                                                   const std::string& path,
                                                   ConversionContext& ctx) const override {
    std::vector<ir::ContentPart> parts;
    if (content.is_string()) {
      parts.emplace_back(ir::TextPart{content.get<std::string>(), Json()});
      return parts;
    }
    require_array(content, path);
    for (std::size_t i = 0; i < content.size(); ++i) {
      auto item_path = ju::index_path(path, i);
      FieldMap fields(content[i], item_path);
      auto type = require_string(*[&] {
        const auto* t = fields.take("type");
        if (!t) ju::fail("content part missing 'type'", item_path);
        return t;
      }(), fields.key_path("type"));

      if (type == "text") {
        ir::TextPart p;
        p.text = require_string(take_required(fields, "text", item_path), fields.key_path("text"));
        convert::route_leftovers(fields, p.provider_metadata, ctx, kFmt);
        parts.emplace_back(std::move(p));
      } else if (type == "image_url") {
        auto p = common::image_from_openai_url(take_required(fields, "image_url", item_path),
                                               fields.key_path("image_url"), ctx, kFmt);
        convert::route_leftovers(fields, p.provider_metadata, ctx, kFmt);
        parts.emplace_back(std::move(p));
      } else if (type == "input_audio") {
        const auto& audio = require_object(take_required(fields, "input_audio", item_path),
                                           fields.key_path("input_audio"));
        ir::AudioPart p;
        p.data = require_string(audio.value("data", Json()),
                                key_path(fields.key_path("input_audio"), "data"));
        auto format = require_string(audio.value("format", Json()),
                                     key_path(fields.key_path("input_audio"), "format"));
        p.media_type = "audio/" + format;
        convert::route_leftovers(fields, p.provider_metadata, ctx, kFmt);
        parts.emplace_back(std::move(p));
      } else if (type == "file") {
        auto p = common::file_from_openai(take_required(fields, "file", item_path),
                                          fields.key_path("file"), ctx, kFmt);
        convert::route_leftovers(fields, p.provider_metadata, ctx, kFmt);
        parts.emplace_back(std::move(p));
      } else if (type == "refusal") {
        ir::RefusalPart p;
        p.reason = require_string(take_required(fields, "refusal", item_path),
                                  fields.key_path("refusal"));
        convert::route_leftovers(fields, p.provider_metadata, ctx, kFmt);
        parts.emplace_back(std::move(p));
      } else {
        ju::fail("unknown content part type '" + type + "'", item_path);
      }
    }
    (void)role;
    return parts;
  }

  Json parts_to_provider(std::span<const ir::ContentPart> parts, ir::Role role,
                         ConversionContext& ctx) const override {
    Json arr = Json::array();
    for (const auto& part : parts) {
      if (auto j = part_to_provider(part, role, ctx)) arr.push_back(std::move(*j));
    }
    return arr;
  }

  std::optional<Json> part_to_provider(const ir::ContentPart& part, ir::Role role,
                                       ConversionContext& ctx) const {
    (void)role;
    std::optional<Json> out;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, ir::TextPart>) {
            Json j{{"type", "text"}, {"text", p.text}};
            convert::restore_metadata(p.provider_metadata, kFmt, j, ctx, "text part");
            out = std::move(j);
          } else if constexpr (std::is_same_v<T, ir::ImagePart>) {
            Json j{{"type", "image_url"}, {"image_url", common::image_to_openai_url(p, ctx, kFmt)}};
            out = std::move(j);
          } else if constexpr (std::is_same_v<T, ir::AudioPart>) {
            auto slash = p.media_type.find('/');
            std::string format =
                slash == std::string::npos ? p.media_type : p.media_type.substr(slash + 1);
            Json j{{"type", "input_audio"},
                   {"input_audio", Json{{"data", p.data}, {"format", format}}}};
            convert::restore_metadata(p.provider_metadata, kFmt, j, ctx, "audio part");
            out = std::move(j);
          } else if constexpr (std::is_same_v<T, ir::FilePart>) {
            Json j{{"type", "file"}, {"file", common::file_to_openai(p, ctx, kFmt)}};
            out = std::move(j);
          } else if constexpr (std::is_same_v<T, ir::RefusalPart>) {
            Json j{{"type", "refusal"}, {"refusal", p.reason}};
            convert::restore_metadata(p.provider_metadata, kFmt, j, ctx, "refusal part");
            out = std::move(j);
          } else if constexpr (std::is_same_v<T, ir::ReasoningPart>) {
            ctx.warn(WarningCode::unsupported_content,
                     "reasoning content has no openai_chat field; dropped");
          } else if constexpr (std::is_same_v<T, ir::CitationPart>) {
            ctx.warn(WarningCode::unsupported_content,
                     "citation has no openai_chat request field; dropped");
          } else {
            ctx.warn(WarningCode::unsupported_content,
                     std::string(ir::part_kind_name(ir::part_kind(ir::ContentPart(p)))) +
                         " part not expressible in openai_chat content; dropped");
          }
        },
        part);
    return out;
  }

private:
  static const Json& take_required(FieldMap& fields, std::string_view key,
                                   const std::string& path) {
    const auto* v = fields.take(key);
    if (!v) ju::fail("missing required '" + std::string(key) + "'", path);
    return *v;
  }
};

// Renderable-in-content test: parts the chat content array can carry.
bool chat_contentish(const ir::ContentPart& p) {
  switch (ir::part_kind(p)) {
    case ir::PartKind::text:
    case ir::PartKind::image:
    case ir::PartKind::audio:
    case ir::PartKind::file:
    case ir::PartKind::refusal:
      return true;
    default:
      return false;
  }
}

// ------------------------------------------------------------------
// MessageOps
// ------------------------------------------------------------------

class ChatMessageOps : public convert::MessageOps {
public:
  ChatMessageOps() = default;

  void request_messages_from_provider(FieldMap& body, ir::IRRequest& out,
                                      ConversionContext& ctx) const override {
    const auto* msgs = body.take("messages");
    if (!msgs) throw errors::MalformedInput("request missing required 'messages'", body.path());
    const auto& arr = require_array(*msgs, body.key_path("messages"));
    if (arr.empty()) {
      throw errors::MalformedInput("messages must be non-empty", body.key_path("messages"));
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto path = ju::index_path(body.key_path("messages"), i);
      auto message = parse_message(arr[i], path, ctx);
      if (i == 0 && !out.system && std::holds_alternative<ir::SystemMessage>(message)) {
        out.system = std::get<ir::SystemMessage>(std::move(message));
      } else {
        out.messages.push_back(std::move(message));
      }
    }
  }

  void request_messages_to_provider(const ir::IRRequest& request, Json& body,
                                    ConversionContext& ctx) const override {
    Json arr = Json::array();
    if (request.system) {
      emit_message(ir::Message(*request.system), arr, ctx);
    }
    for (const auto& m : request.messages) emit_message(m, arr, ctx);
    body["messages"] = std::move(arr);
  }

  std::vector<ir::Message> messages_from_provider(const Json& messages,
                                                  ConversionContext& ctx) const override {
    std::vector<ir::Message> out;
    for (std::size_t i = 0; i < messages.size(); ++i) {
      out.push_back(parse_message(messages[i], ju::index_path("$", i), ctx));
    }
    return out;
  }

  Json messages_to_provider(std::span<const ir::Message> messages,
                            ConversionContext& ctx) const override {
    Json arr = Json::array();
    for (const auto& m : messages) emit_message(m, arr, ctx);
    return arr;
  }

  // Content value for a message: plain string when it is a single text
  // part (or, in strip mode, any all-text run), parts array otherwise.
  Json shape_content(std::span<const ir::ContentPart> parts, ir::Role role,
                     const ir::MessageMetadata& meta, ConversionContext& ctx) const {
    bool marker_array = false;
    if (const auto* shape = common::get_custom(meta, kFmt, "__content_shape__")) {
      marker_array = *shape == "array";
    }
    if (common::all_text(parts) && !marker_array) {
      if (parts.size() == 1) return std::get<ir::TextPart>(parts.front()).text;
      if (!ctx.preserve()) return common::joined_text(parts);
    }
    return content_.parts_to_provider(parts, role, ctx);
  }

  ir::Message parse_message(const Json& msg, const std::string& path,
                            ConversionContext& ctx) const {
    FieldMap fields(msg, path);
    const auto* role_v = fields.take("role");
    if (!role_v) ju::fail("message missing 'role'", path);
    auto role = require_string(*role_v, fields.key_path("role"));

    ir::MessageMetadata meta;
    auto note_array_shape = [&](const Json& content, std::span<const ir::ContentPart> parts) {
      if (ctx.preserve() && content.is_array() && common::all_text(parts) && parts.size() == 1) {
        common::set_custom(meta, kFmt, "__content_shape__", "array");
      }
    };

    if (role == "system" || role == "developer") {
      const auto* content = fields.take("content");
      if (!content) ju::fail("system message missing 'content'", path);
      auto parts = content_.parts_from_provider(*content, ir::Role::system,
                                                fields.key_path("content"), ctx);
      note_array_shape(*content, parts);
      if (role == "developer" && ctx.preserve()) {
        common::set_custom(meta, kFmt, "__original_role__", "developer");
      }
      route_message_leftovers(fields, meta, ctx);
      return ir::SystemMessage{std::move(parts), std::move(meta)};
    }

    if (role == "user") {
      const auto* content = fields.take("content");
      if (!content) ju::fail("user message missing 'content'", path);
      auto parts = content_.parts_from_provider(*content, ir::Role::user,
                                                fields.key_path("content"), ctx);
      note_array_shape(*content, parts);
      route_message_leftovers(fields, meta, ctx);
      return ir::UserMessage{std::move(parts), std::move(meta)};
    }

    if (role == "assistant") {
      std::vector<ir::ContentPart> parts;
      if (const auto* content = fields.take("content")) {
        if (content->is_null()) {
          if (ctx.preserve()) common::set_custom(meta, kFmt, "__content_shape__", "null");
        } else {
          parts = content_.parts_from_provider(*content, ir::Role::assistant,
                                               fields.key_path("content"), ctx);
          note_array_shape(*content, parts);
        }
      }
      if (const auto* refusal = fields.take("refusal")) {
        if (refusal->is_null()) {
          if (ctx.preserve()) common::set_custom(meta, kFmt, "__refusal_null__", true);
        } else {
          parts.emplace_back(ir::RefusalPart{
              require_string(*refusal, fields.key_path("refusal")), Json()});
        }
      }
      if (const auto* calls = fields.take("tool_calls")) {
        parse_tool_calls(*calls, fields.key_path("tool_calls"), parts);
      }
      route_message_leftovers(fields, meta, ctx);
      return ir::AssistantMessage{std::move(parts), std::move(meta)};
    }

    if (role == "tool") {
      ir::ToolResultPart result;
      const auto* id = fields.take("tool_call_id");
      if (!id) ju::fail("tool message missing 'tool_call_id'", path);
      result.tool_call_id = require_string(*id, fields.key_path("tool_call_id"));
      const auto* content = fields.take("content");
      if (!content) ju::fail("tool message missing 'content'", path);
      auto inner = content_.parts_from_provider(*content, ir::Role::tool,
                                                fields.key_path("content"), ctx);
      for (auto& p : inner) {
        if (auto* t = std::get_if<ir::TextPart>(&p)) {
          result.content.emplace_back(std::move(*t));
        } else if (auto* img = std::get_if<ir::ImagePart>(&p)) {
          result.content.emplace_back(std::move(*img));
        } else {
          ju::fail("tool message content must be text or image parts", fields.key_path("content"));
        }
      }
      if (ctx.preserve() && content->is_array()) {
        common::set_custom(meta, kFmt, "__content_shape__", "array");
      }
      route_message_leftovers(fields, meta, ctx);
      std::vector<ir::ContentPart> parts;
      parts.emplace_back(std::move(result));
      return ir::ToolMessage{std::move(parts), std::move(meta)};
    }

    ju::fail("unknown role '" + role + "'", fields.key_path("role"));
  }

  void emit_message(const ir::Message& message, Json& arr, ConversionContext& ctx) const {
    const auto& meta = ir::message_metadata(message);
    switch (ir::message_role(message)) {
      case ir::Role::system: {
        std::string role = "system";
        if (const auto* orig = common::get_custom(meta, kFmt, "__original_role__")) {
          if (orig->is_string()) role = orig->get<std::string>();
        }
        Json j{{"role", role}};
        j["content"] = shape_content(ir::message_content(message), ir::Role::system, meta, ctx);
        convert::restore_metadata(meta.custom, kFmt, j, ctx, "system message");
        arr.push_back(std::move(j));
        break;
      }
      case ir::Role::user: {
        Json j{{"role", "user"}};
        j["content"] = shape_content(ir::message_content(message), ir::Role::user, meta, ctx);
        convert::restore_metadata(meta.custom, kFmt, j, ctx, "user message");
        arr.push_back(std::move(j));
        break;
      }
      case ir::Role::assistant: {
        arr.push_back(assistant_to_chat(ir::message_content(message), meta, ctx,
                                        /*response_shape=*/false));
        break;
      }
      case ir::Role::tool: {
        bool first = true;
        for (const auto& part : ir::message_content(message)) {
          const auto* result = std::get_if<ir::ToolResultPart>(&part);
          if (!result) {
            ctx.warn(WarningCode::unsupported_content,
                     "non-tool_result part in tool message dropped");
            continue;
          }
          Json j{{"role", "tool"}, {"tool_call_id", result->tool_call_id}};
          std::vector<ir::ContentPart> inner;
          bool dropped_image = false;
          for (const auto& c : result->content) {
            if (const auto* t = std::get_if<ir::TextPart>(&c)) inner.emplace_back(*t);
            else dropped_image = true;
          }
          if (dropped_image) {
            ctx.warn(WarningCode::unsupported_content,
                     "image in tool result not expressible in openai_chat; dropped");
          }
          j["content"] = shape_content(inner, ir::Role::tool, meta, ctx);
          if (result->is_error) {
            ctx.warn(WarningCode::unmapped_parameter,
                     "tool result is_error flag has no openai_chat field; dropped");
          }
          if (first) {
            convert::restore_metadata(meta.custom, kFmt, j, ctx, "tool message");
            first = false;
          }
          arr.push_back(std::move(j));
        }
        break;
      }
    }
  }

  // Builds a chat assistant message. Request shape omits empty content;
  // response shape always carries content (null when there is no text).
  Json assistant_to_chat(std::span<const ir::ContentPart> parts, const ir::MessageMetadata& meta,
                         ConversionContext& ctx, bool response_shape) const {
    Json j{{"role", "assistant"}};

    bool array_mode = false;
    if (const auto* shape = common::get_custom(meta, kFmt, "__content_shape__")) {
      array_mode = *shape == "array";
    }

    std::vector<ir::ContentPart> contentish;
    std::vector<const ir::ToolCallPart*> calls;
    std::vector<const ir::RefusalPart*> refusals;
    Json annotations = Json::array();
    for (const auto& part : parts) {
      if (const auto* call = std::get_if<ir::ToolCallPart>(&part)) {
        calls.push_back(call);
      } else if (const auto* refusal = std::get_if<ir::RefusalPart>(&part)) {
        if (array_mode) contentish.push_back(part);
        else refusals.push_back(refusal);
      } else if (const auto* cite = std::get_if<ir::CitationPart>(&part)) {
        if (response_shape) {
          if (auto a = citation_to_annotation(*cite, ctx)) annotations.push_back(std::move(*a));
        } else {
          ctx.warn(WarningCode::unsupported_content,
                   "citation has no openai_chat request field; dropped");
        }
      } else if (std::holds_alternative<ir::ReasoningPart>(part)) {
        ctx.warn(WarningCode::unsupported_content,
                 "reasoning content has no openai_chat field; dropped");
      } else if (chat_contentish(part)) {
        contentish.push_back(part);
      }
    }

    bool content_null_marker = false;
    if (const auto* shape = common::get_custom(meta, kFmt, "__content_shape__")) {
      content_null_marker = *shape == "null";
    }

    if (contentish.empty()) {
      if (response_shape || content_null_marker) j["content"] = nullptr;
    } else {
      j["content"] = shape_content(contentish, ir::Role::assistant, meta, ctx);
    }
    if (!refusals.empty()) {
      j["refusal"] = refusals.front()->reason;
      if (refusals.size() > 1) {
        ctx.warn(WarningCode::unsupported_content, "multiple refusal parts collapsed to one");
      }
    } else if (response_shape && common::get_custom(meta, kFmt, "__refusal_null__")) {
      j["refusal"] = nullptr;
    }
    if (!calls.empty()) {
      Json arr = Json::array();
      for (const auto* call : calls) {
        Json entry{{"id", call->tool_call_id},
                   {"type", "function"},
                   {"function", Json{{"name", call->tool_name},
                                     {"arguments", call->tool_input.dump()}}}};
        convert::restore_metadata(call->provider_metadata, kFmt, entry, ctx, "tool call");
        arr.push_back(std::move(entry));
      }
      j["tool_calls"] = std::move(arr);
    }
    if (!annotations.empty()) j["annotations"] = std::move(annotations);
    convert::restore_metadata(meta.custom, kFmt, j, ctx, "assistant message");
    return j;
  }

  void parse_tool_calls(const Json& calls, const std::string& path,
                        std::vector<ir::ContentPart>& parts) const {
    require_array(calls, path);
    for (std::size_t i = 0; i < calls.size(); ++i) {
      auto entry_path = ju::index_path(path, i);
      FieldMap entry(calls[i], entry_path);
      ir::ToolCallPart call;
      const auto* id = entry.take("id");
      if (!id) ju::fail("tool call missing 'id'", entry_path);
      call.tool_call_id = require_string(*id, entry.key_path("id"));
      if (const auto* type = entry.take("type")) {
        auto t = require_string(*type, entry.key_path("type"));
        if (t != "function") ju::fail("unsupported tool call type '" + t + "'", entry.key_path("type"));
      }
      const auto* fn = entry.take("function");
      if (!fn) ju::fail("tool call missing 'function'", entry_path);
      const auto& fn_obj = require_object(*fn, entry.key_path("function"));
      call.tool_name = require_string(fn_obj.value("name", Json()),
                                      key_path(entry.key_path("function"), "name"));
      auto args_path = key_path(entry.key_path("function"), "arguments");
      auto args = require_string(fn_obj.value("arguments", Json("")), args_path);
      if (args.empty()) {
        call.tool_input = Json::object();
      } else {
        auto parsed = Json::parse(args, nullptr, false);
        if (parsed.is_discarded() || !parsed.is_object()) {
          throw errors::MalformedInput("tool call arguments string is not a JSON object", args_path);
        }
        call.tool_input = std::move(parsed);
      }
      parts.emplace_back(std::move(call));
    }
  }

  std::optional<Json> citation_to_annotation(const ir::CitationPart& cite,
                                             ConversionContext& ctx) const {
    if (!cite.url) {
      ctx.warn(WarningCode::unsupported_content,
               "citation without url not expressible as openai_chat annotation; dropped");
      return std::nullopt;
    }
    Json inner = Json::object();
    if (const auto* title = convert::metadata_entry(cite.provider_metadata, kFmt, "title")) {
      inner["title"] = *title;
    }
    inner["url"] = *cite.url;
    if (cite.span) {
      inner["start_index"] = cite.span->start;
      inner["end_index"] = cite.span->end;
    }
    if (cite.quoted_text) {
      ctx.warn(WarningCode::unmapped_parameter, "citation quoted_text dropped for openai_chat");
    }
    return Json{{"type", "url_citation"}, {"url_citation", std::move(inner)}};
  }

private:
  void route_message_leftovers(FieldMap& fields, ir::MessageMetadata& meta,
                               ConversionContext& ctx) const {
    convert::route_leftovers(fields, meta.custom, ctx, kFmt);
  }

  ChatContentOps content_; // stateless; MessageOps delegates part work here
};

// ------------------------------------------------------------------
// ToolOps
// ------------------------------------------------------------------

class ChatToolOps : public convert::ToolOps {
public:
  void tools_from_provider(FieldMap& body, ir::IRRequest& out,
                           ConversionContext& ctx) const override {
    if (const auto* tools = body.take("tools")) {
      const auto& arr = require_array(*tools, body.key_path("tools"));
      std::vector<ir::ToolDefinition> defs;
      Json extras = Json::object();
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto path = ju::index_path(body.key_path("tools"), i);
        FieldMap entry(arr[i], path);
        auto type = require_string(*[&] {
          const auto* t = entry.take("type");
          if (!t) ju::fail("tool missing 'type'", path);
          return t;
        }(), entry.key_path("type"));
        if (type != "function") ju::fail("unsupported tool type '" + type + "'", path);
        const auto* fn = entry.take("function");
        if (!fn) ju::fail("tool missing 'function'", path);
        FieldMap fn_fields(*fn, entry.key_path("function"));
        ir::ToolDefinition def;
        def.name = require_string(*[&] {
          const auto* n = fn_fields.take("name");
          if (!n) ju::fail("tool function missing 'name'", fn_fields.path());
          return n;
        }(), fn_fields.key_path("name"));
        if (const auto* d = fn_fields.take("description")) {
          def.description = require_string(*d, fn_fields.key_path("description"));
        }
        if (const auto* p = fn_fields.take("parameters")) {
          def.parameters = require_object(*p, fn_fields.key_path("parameters"));
        }
        Json extra = Json::object();
        for (const auto& key : fn_fields.leftover_keys()) {
          if (ctx.preserve()) extra["function"][key] = fn->at(key);
          else ctx.warn(WarningCode::dropped_provider_feature,
                        "dropped provider field '" + key + "'", fn_fields.key_path(key));
        }
        for (const auto& key : entry.leftover_keys()) {
          if (ctx.preserve()) extra[key] = arr[i].at(key);
          else ctx.warn(WarningCode::dropped_provider_feature,
                        "dropped provider field '" + key + "'", entry.key_path(key));
        }
        if (!extra.empty()) extras[std::to_string(i)] = std::move(extra);
        defs.push_back(std::move(def));
      }
      if (!extras.empty()) common::set_shape(out, kFmt, "tool_extras", std::move(extras));
      out.tools = std::move(defs);
    }

    if (const auto* choice = body.take("tool_choice")) {
      out.tool_choice = parse_tool_choice(*choice, body.key_path("tool_choice"));
    }
    if (const auto* parallel = body.take("parallel_tool_calls")) {
      out.tool_call_config =
          ir::ToolCallConfig{require_bool(*parallel, body.key_path("parallel_tool_calls"))};
    }
  }

  void tools_to_provider(const ir::IRRequest& request, Json& body,
                         ConversionContext& ctx) const override {
    if (request.tools) {
      const Json* extras = common::get_shape(request, kFmt, "tool_extras");
      Json arr = Json::array();
      for (std::size_t i = 0; i < request.tools->size(); ++i) {
        const auto& def = (*request.tools)[i];
        if (def.tool_type == ir::ToolType::mcp) {
          ctx.warn(WarningCode::unmapped_parameter,
                   "mcp tool type emitted as function for openai_chat");
        }
        Json fn{{"name", def.name}};
        if (def.description) fn["description"] = *def.description;
        if (!def.parameters.is_null()) fn["parameters"] = def.parameters;
        Json entry{{"type", "function"}};
        if (extras && extras->contains(std::to_string(i))) {
          const auto& extra = (*extras)[std::to_string(i)];
          for (const auto& [key, value] : extra.items()) {
            if (key == "function") {
              for (const auto& [fk, fv] : value.items()) fn[fk] = fv;
            } else {
              entry[key] = value;
            }
          }
        }
        entry["function"] = std::move(fn);
        arr.push_back(std::move(entry));
      }
      body["tools"] = std::move(arr);
    }
    if (request.tool_choice) {
      body["tool_choice"] = emit_tool_choice(*request.tool_choice);
    }
    if (request.tool_call_config && request.tool_call_config->parallel_tool_calls) {
      body["parallel_tool_calls"] = *request.tool_call_config->parallel_tool_calls;
    }
  }

  static ir::ToolChoice parse_tool_choice(const Json& choice, const std::string& path) {
    ir::ToolChoice tc;
    if (choice.is_string()) {
      auto s = choice.get<std::string>();
      if (s == "none") tc.mode = ir::ToolChoice::Mode::none;
      else if (s == "auto") tc.mode = ir::ToolChoice::Mode::auto_;
      else if (s == "required") tc.mode = ir::ToolChoice::Mode::any;
      else ju::fail("unknown tool_choice '" + s + "'", path);
      return tc;
    }
    const auto& obj = require_object(choice, path);
    auto type = require_string(obj.value("type", Json()), key_path(path, "type"));
    if (type != "function") ju::fail("unknown tool_choice type '" + type + "'", path);
    tc.mode = ir::ToolChoice::Mode::tool;
    const auto& fn = require_object(obj.value("function", Json()), key_path(path, "function"));
    tc.tool_name = require_string(fn.value("name", Json()), key_path(key_path(path, "function"), "name"));
    return tc;
  }

  static Json emit_tool_choice(const ir::ToolChoice& tc) {
    switch (tc.mode) {
      case ir::ToolChoice::Mode::none: return "none";
      case ir::ToolChoice::Mode::auto_: return "auto";
      case ir::ToolChoice::Mode::any: return "required";
      case ir::ToolChoice::Mode::tool:
        return Json{{"type", "function"},
                    {"function", Json{{"name", tc.tool_name.value_or("")}}}};
    }
    return "auto";
  }
};

// ------------------------------------------------------------------
// ConfigOps
// ------------------------------------------------------------------

class ChatConfigOps : public convert::ConfigOps {
public:
  void config_from_provider(FieldMap& body, ir::IRRequest& out,
                            ConversionContext& ctx) const override {
    (void)ctx;
    ir::GenerationConfig gen;
    if (const auto* v = body.take("temperature")) {
      gen.temperature = require_number(*v, body.key_path("temperature"));
    }
    if (const auto* v = body.take("top_p")) gen.top_p = require_number(*v, body.key_path("top_p"));
    if (const auto* v = body.take("max_tokens")) {
      gen.max_tokens = require_int(*v, body.key_path("max_tokens"));
    }
    if (const auto* v = body.take("max_completion_tokens")) {
      gen.max_tokens = require_int(*v, body.key_path("max_completion_tokens"));
      common::set_shape(out, kFmt, "max_tokens_key", "max_completion_tokens");
    }
    if (const auto* v = body.take("stop")) {
      if (v->is_string()) {
        gen.stop_sequences = {v->get<std::string>()};
        common::set_shape(out, kFmt, "stop", "string");
      } else {
        const auto& arr = require_array(*v, body.key_path("stop"));
        std::vector<std::string> stops;
        for (std::size_t i = 0; i < arr.size(); ++i) {
          stops.push_back(require_string(arr[i], ju::index_path(body.key_path("stop"), i)));
        }
        gen.stop_sequences = std::move(stops);
      }
    }
    if (const auto* v = body.take("frequency_penalty")) {
      gen.frequency_penalty = require_number(*v, body.key_path("frequency_penalty"));
    }
    if (const auto* v = body.take("presence_penalty")) {
      gen.presence_penalty = require_number(*v, body.key_path("presence_penalty"));
    }
    if (const auto* v = body.take("logit_bias")) {
      gen.logit_bias = require_object(*v, body.key_path("logit_bias"));
    }
    if (const auto* v = body.take("seed")) gen.seed = require_int(*v, body.key_path("seed"));

    bool logprobs_key = false;
    std::optional<bool> logprobs_enabled;
    std::optional<std::int64_t> top_logprobs;
    if (const auto* v = body.take("logprobs")) {
      logprobs_key = true;
      logprobs_enabled = require_bool(*v, body.key_path("logprobs"));
    }
    if (const auto* v = body.take("top_logprobs")) {
      top_logprobs = require_int(*v, body.key_path("top_logprobs"));
    }
    if (logprobs_key || top_logprobs) {
      gen.logprobs = ir::LogprobsConfig{logprobs_enabled.value_or(false), top_logprobs};
      if (!logprobs_key) common::set_shape(out, kFmt, "logprobs_omitted", true);
    }
    if (!gen.empty()) out.generation = gen;

    if (const auto* v = body.take("response_format")) {
      out.response_format = parse_response_format(*v, body.key_path("response_format"), out, ctx);
    }
    if (const auto* v = body.take("stream")) {
      ir::StreamConfig sc;
      sc.enabled = require_bool(*v, body.key_path("stream"));
      out.stream = sc;
    }
    if (const auto* v = body.take("stream_options")) {
      const auto& obj = require_object(*v, body.key_path("stream_options"));
      if (!out.stream) out.stream = ir::StreamConfig{};
      if (auto it = obj.find("include_usage"); it != obj.end()) {
        out.stream->include_usage = require_bool(*it, key_path(body.key_path("stream_options"),
                                                               "include_usage"));
      }
    }
    if (const auto* v = body.take("reasoning_effort")) {
      auto s = require_string(*v, body.key_path("reasoning_effort"));
      ir::ReasoningConfig rc;
      if (s == "low") rc.effort = ir::ReasoningEffort::low;
      else if (s == "medium") rc.effort = ir::ReasoningEffort::medium;
      else if (s == "high") rc.effort = ir::ReasoningEffort::high;
      else ju::fail("unknown reasoning_effort '" + s + "'", body.key_path("reasoning_effort"));
      out.reasoning = rc;
    }
  }

  void config_to_provider(const ir::IRRequest& request, Json& body,
                          ConversionContext& ctx) const override {
    if (request.generation) {
      const auto& gen = *request.generation;
      if (gen.temperature) body["temperature"] = *gen.temperature;
      if (gen.top_p) body["top_p"] = *gen.top_p;
      if (gen.top_k) {
        ctx.warn(WarningCode::unmapped_parameter, "top_k not supported by openai_chat; dropped",
                 "$.generation.top_k");
      }
      if (gen.max_tokens) {
        const auto* key = common::get_shape(request, kFmt, "max_tokens_key");
        body[key && key->is_string() ? key->get<std::string>() : "max_tokens"] = *gen.max_tokens;
      }
      if (gen.stop_sequences) {
        const auto* shape = common::get_shape(request, kFmt, "stop");
        if (shape && *shape == "string" && gen.stop_sequences->size() == 1) {
          body["stop"] = gen.stop_sequences->front();
        } else {
          body["stop"] = *gen.stop_sequences;
        }
      }
      if (gen.frequency_penalty) body["frequency_penalty"] = *gen.frequency_penalty;
      if (gen.presence_penalty) body["presence_penalty"] = *gen.presence_penalty;
      if (!gen.logit_bias.is_null()) body["logit_bias"] = gen.logit_bias;
      if (gen.seed) body["seed"] = *gen.seed;
      if (gen.logprobs) {
        if (!common::get_shape(request, kFmt, "logprobs_omitted")) {
          body["logprobs"] = gen.logprobs->enabled;
        }
        if (gen.logprobs->top_logprobs) body["top_logprobs"] = *gen.logprobs->top_logprobs;
      }
    }
    if (request.response_format) {
      body["response_format"] = emit_response_format(*request.response_format, request);
    }
    if (request.stream) {
      body["stream"] = request.stream->enabled;
      if (request.stream->include_usage) {
        body["stream_options"] = Json{{"include_usage", *request.stream->include_usage}};
      }
    }
    if (request.reasoning) {
      if (request.reasoning->effort) {
        body["reasoning_effort"] =
            std::string(ir::reasoning_effort_name(*request.reasoning->effort));
      }
      if (request.reasoning->budget_tokens) {
        ctx.warn(WarningCode::unmapped_parameter,
                 "reasoning budget_tokens not supported by openai_chat; dropped",
                 "$.reasoning.budget_tokens");
      }
      if (request.reasoning->enabled && !request.reasoning->effort) {
        ctx.warn(WarningCode::unmapped_parameter,
                 "reasoning enabled flag has no openai_chat equivalent; dropped",
                 "$.reasoning.enabled");
      }
    }
  }

  ir::ResponseFormatConfig parse_response_format(const Json& v, const std::string& path,
                                                 ir::IRRequest& out, ConversionContext& ctx) const {
    const auto& obj = require_object(v, path);
    auto type = require_string(obj.value("type", Json()), key_path(path, "type"));
    ir::ResponseFormatConfig rf;
    if (type == "text") {
      rf.kind = ir::ResponseFormatConfig::Kind::text;
    } else if (type == "json_object") {
      rf.kind = ir::ResponseFormatConfig::Kind::json_object;
    } else if (type == "json_schema") {
      rf.kind = ir::ResponseFormatConfig::Kind::json_schema;
      const auto& js = require_object(obj.value("json_schema", Json()),
                                      key_path(path, "json_schema"));
      Json extra = Json::object();
      for (const auto& [key, value] : js.items()) {
        if (key == "name") rf.schema_name = require_string(value, key_path(path, "json_schema.name"));
        else if (key == "schema") rf.schema = value;
        else if (ctx.preserve()) extra[key] = value;
        else ctx.warn(WarningCode::dropped_provider_feature,
                      "dropped provider field '" + key + "'", key_path(path, "json_schema." + key));
      }
      if (!extra.empty()) common::set_shape(out, kFmt, "response_format_extra", std::move(extra));
    } else {
      ju::fail("unknown response_format type '" + type + "'", key_path(path, "type"));
    }
    return rf;
  }

  Json emit_response_format(const ir::ResponseFormatConfig& rf, const ir::IRRequest& request) const {
    switch (rf.kind) {
      case ir::ResponseFormatConfig::Kind::text: return Json{{"type", "text"}};
      case ir::ResponseFormatConfig::Kind::json_object: return Json{{"type", "json_object"}};
      case ir::ResponseFormatConfig::Kind::json_schema: {
        Json js{{"name", rf.schema_name.value_or("response_schema")}};
        if (!rf.schema.is_null()) js["schema"] = rf.schema;
        if (const auto* extra = common::get_shape(request, kFmt, "response_format_extra")) {
          for (const auto& [key, value] : extra->items()) js[key] = value;
        }
        return Json{{"type", "json_schema"}, {"json_schema", std::move(js)}};
      }
    }
    return Json{{"type", "text"}};
  }
};

// ------------------------------------------------------------------
// Usage codec
// ------------------------------------------------------------------

ir::UsageInfo usage_from_chat(const Json& u, const std::string& path, Json& resp_meta,
                              ConversionContext& ctx) {
  FieldMap fields(u, path);
  ir::UsageInfo usage;
  if (const auto* v = fields.take("prompt_tokens")) {
    usage.prompt_tokens = require_int(*v, fields.key_path("prompt_tokens"));
  }
  if (const auto* v = fields.take("completion_tokens")) {
    usage.completion_tokens = require_int(*v, fields.key_path("completion_tokens"));
  }
  if (const auto* v = fields.take("total_tokens")) {
    auto total = require_int(*v, fields.key_path("total_tokens"));
    if (total != usage.prompt_tokens + usage.completion_tokens) {
      // Inconsistent totals must survive a preserve round trip verbatim.
      if (ctx.preserve()) convert::set_metadata_entry(resp_meta, kFmt, "usage_total_tokens", total);
      else ctx.warn(WarningCode::dropped_provider_feature,
                    "total_tokens inconsistent with prompt+completion; recomputed",
                    fields.key_path("total_tokens"));
    }
  }
  auto take_details = [&](const char* key, const char* mapped,
                          std::optional<std::int64_t>& slot, const char* extra_key) {
    const auto* v = fields.take(key);
    if (!v) return;
    const auto& obj = require_object(*v, fields.key_path(key));
    Json extra = Json::object();
    for (const auto& [k, value] : obj.items()) {
      if (k == mapped) slot = require_int(value, key_path(fields.key_path(key), k));
      else if (ctx.preserve()) extra[k] = value;
      else ctx.warn(WarningCode::dropped_provider_feature, "dropped provider field '" + k + "'",
                    key_path(fields.key_path(key), k));
    }
    if (!extra.empty()) convert::set_metadata_entry(resp_meta, kFmt, extra_key, std::move(extra));
  };
  take_details("prompt_tokens_details", "cached_tokens", usage.cached_tokens,
               "usage_prompt_details_extra");
  take_details("completion_tokens_details", "reasoning_tokens", usage.reasoning_tokens,
               "usage_completion_details_extra");
  convert::route_leftovers(fields, resp_meta, ctx, kFmt);
  return usage;
}

Json usage_to_chat(const ir::UsageInfo& usage, const Json& resp_meta) {
  Json u = Json::object();
  u["prompt_tokens"] = usage.prompt_tokens;
  u["completion_tokens"] = usage.completion_tokens;
  if (const auto* total = convert::metadata_entry(resp_meta, kFmt, "usage_total_tokens")) {
    u["total_tokens"] = *total;
  } else {
    u["total_tokens"] = usage.prompt_tokens + usage.completion_tokens;
  }
  Json prompt_details = Json::object();
  if (usage.cached_tokens) prompt_details["cached_tokens"] = *usage.cached_tokens;
  if (const auto* extra = convert::metadata_entry(resp_meta, kFmt, "usage_prompt_details_extra")) {
    for (const auto& [k, v] : extra->items()) prompt_details[k] = v;
  }
  if (!prompt_details.empty()) u["prompt_tokens_details"] = std::move(prompt_details);
  Json completion_details = Json::object();
  if (usage.reasoning_tokens) completion_details["reasoning_tokens"] = *usage.reasoning_tokens;
  if (const auto* extra =
          convert::metadata_entry(resp_meta, kFmt, "usage_completion_details_extra")) {
    for (const auto& [k, v] : extra->items()) completion_details[k] = v;
  }
  if (!completion_details.empty()) u["completion_tokens_details"] = std::move(completion_details);
  return u;
}

// ------------------------------------------------------------------
// Streaming
// ------------------------------------------------------------------

std::string finish_to_chat_stream(ir::FinishReason reason) {
  switch (reason) {
    case ir::FinishReason::stop: return "stop";
    case ir::FinishReason::length: return "length";
    case ir::FinishReason::tool_calls: return "tool_calls";
    case ir::FinishReason::content_filter: return "content_filter";
    default: return "stop";
  }
}

class ChatStreamDecoder : public convert::StreamDecoder {
public:
  std::vector<ir::StreamEvent> on_frame(const sse::SseFrame& frame, StreamContext& ctx) override {
    if (finished_) {
      throw errors::ProtocolViolation("stream frame after the [DONE] sentinel");
    }
    if (sse::is_done_sentinel(frame)) {
      finished_ = true;
      return finalize(ctx);
    }
    auto chunk = Json::parse(frame.data, nullptr, false);
    if (chunk.is_discarded() || !chunk.is_object()) {
      throw errors::MalformedInput("unparseable stream chunk");
    }
    auto& cursor = ensure_cursor(ctx);
    std::vector<ir::StreamEvent> events;

    if (!cursor["started"].get<bool>()) {
      cursor["started"] = true;
      ir::StreamStart start;
      start.response_id = chunk.value("id", "");
      start.model = chunk.value("model", "");
      start.created = chunk.value("created", 0);
      ctx.stream_start = start;
      events.push_back(start);
    }

    if (auto u = chunk.find("usage"); u != chunk.end() && u->is_object()) {
      Json scratch;
      auto usage = usage_from_chat(*u, "$.usage", scratch, ctx);
      if (cursor["finish_seen"].get<bool>()) {
        events.push_back(ir::Usage{usage});
      } else {
        ctx.defer_usage(usage);
      }
    }

    auto choices = chunk.find("choices");
    if (choices != chunk.end() && choices->is_array() && !choices->empty()) {
      if (choices->size() > 1) {
        throw errors::UnsupportedConstruct("multi-choice streaming is not representable");
      }
      const auto& choice = (*choices)[0];
      if (auto delta = choice.find("delta"); delta != choice.end() && delta->is_object()) {
        decode_delta(*delta, cursor, ctx, events);
      }
      if (auto fr = choice.find("finish_reason"); fr != choice.end() && fr->is_string()) {
        auto closed = ctx.close_all_blocks();
        events.insert(events.end(), closed.begin(), closed.end());
        cursor["text_block"] = -1;
        Json scratch;
        events.push_back(ir::Finish{finish_from_chat(fr->get<std::string>(), scratch, ctx,
                                                     "$.choices[0].finish_reason")});
        cursor["finish_seen"] = true;
      }
    }
    return events;
  }

  std::vector<ir::StreamEvent> on_close(StreamContext& ctx) override {
    if (finished_) return {};
    finished_ = true;
    return finalize(ctx);
  }

private:
  Json& ensure_cursor(StreamContext& ctx) {
    if (!ctx.provider_cursor.is_object()) {
      ctx.provider_cursor = Json{{"started", false},
                                 {"finish_seen", false},
                                 {"text_block", -1},
                                 {"tool_map", Json::object()}};
    }
    return ctx.provider_cursor;
  }

  void decode_delta(const Json& delta, Json& cursor, StreamContext& ctx,
                    std::vector<ir::StreamEvent>& events) {
    if (auto content = delta.find("content"); content != delta.end() && content->is_string() &&
                                              !content->get<std::string>().empty()) {
      std::int64_t block = cursor["text_block"].get<std::int64_t>();
      if (block < 0) {
        auto closed = ctx.close_all_blocks();
        events.insert(events.end(), closed.begin(), closed.end());
        auto opened = ctx.open_block(ir::BlockKind::text, &block);
        events.insert(events.end(), opened.begin(), opened.end());
        cursor["text_block"] = block;
      }
      events.push_back(ir::TextDelta{block, content->get<std::string>()});
    }
    if (auto calls = delta.find("tool_calls"); calls != delta.end() && calls->is_array()) {
      for (const auto& entry : *calls) {
        if (!entry.is_object() || !entry.contains("index")) {
          throw errors::MalformedInput("tool_calls delta entry missing index");
        }
        auto key = std::to_string(entry["index"].get<std::int64_t>());
        auto& map = cursor["tool_map"];
        std::int64_t block;
        if (!map.contains(key)) {
          // A new tool index must introduce itself with id + name.
          auto id = entry.value("id", "");
          std::string name =
              entry.contains("function") ? entry["function"].value("name", "") : "";
          if (id.empty() || name.empty()) {
            throw errors::ProtocolViolation(
                "tool_calls delta for index " + key + " never introduced with id and name");
          }
          auto closed = ctx.close_all_blocks();
          events.insert(events.end(), closed.begin(), closed.end());
          cursor["text_block"] = -1;
          auto opened = ctx.open_tool_block(id, name, &block);
          events.insert(events.end(), opened.begin(), opened.end());
          map[key] = block;
        } else {
          block = map[key].get<std::int64_t>();
        }
        if (entry.contains("function")) {
          auto args = entry["function"].value("arguments", "");
          if (!args.empty()) events.push_back(ctx.append_tool_args(block, args));
        }
      }
    }
    if (auto refusal = delta.find("refusal"); refusal != delta.end() && refusal->is_string()) {
      ctx.warn(WarningCode::unknown_stream_event, "refusal delta has no IR event; dropped");
    }
  }

  std::vector<ir::StreamEvent> finalize(StreamContext& ctx) {
    std::vector<ir::StreamEvent> events = ctx.close_all_blocks();
    auto deferred = ctx.drain_deferred();
    events.insert(events.end(), deferred.begin(), deferred.end());
    events.push_back(ir::StreamEnd{});
    return events;
  }
};

class ChatStreamEncoder : public convert::StreamEncoder {
public:
  std::vector<sse::SseFrame> on_event(const ir::StreamEvent& event, StreamContext& ctx) override {
    auto& cursor = ensure_cursor(ctx);
    std::vector<sse::SseFrame> frames;
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, ir::StreamStart>) {
            ctx.stream_start = e;
            Json delta{{"role", "assistant"}, {"content", ""}};
            frames.push_back(chunk_frame(ctx, std::move(delta), Json()));
          } else if constexpr (std::is_same_v<T, ir::TextDelta>) {
            frames.push_back(chunk_frame(ctx, Json{{"content", e.text}}, Json()));
          } else if constexpr (std::is_same_v<T, ir::ReasoningDelta>) {
            if (!cursor["warned_reasoning"].template get<bool>()) {
              ctx.warn(WarningCode::unsupported_content,
                       "reasoning deltas have no openai_chat field; dropped");
              cursor["warned_reasoning"] = true;
            }
          } else if constexpr (std::is_same_v<T, ir::ToolCallStart>) {
            auto index = cursor["tool_count"].template get<std::int64_t>();
            cursor["tool_count"] = index + 1;
            cursor["tool_map"][std::to_string(e.block_index)] = index;
            Json entry{{"index", index},
                       {"id", e.tool_call_id},
                       {"type", "function"},
                       {"function", Json{{"name", e.tool_name}, {"arguments", ""}}}};
            frames.push_back(
                chunk_frame(ctx, Json{{"tool_calls", Json::array({entry})}}, Json()));
          } else if constexpr (std::is_same_v<T, ir::ToolCallDelta>) {
            if (e.arguments_fragment.empty()) return;
            auto key = std::to_string(e.block_index);
            if (!cursor["tool_map"].contains(key)) {
              throw errors::ProtocolViolation("tool_call_delta for unknown block " + key);
            }
            std::int64_t chat_index = cursor["tool_map"][key].template get<std::int64_t>();
            Json entry{{"index", chat_index},
                       {"function", Json{{"arguments", e.arguments_fragment}}}};
            frames.push_back(
                chunk_frame(ctx, Json{{"tool_calls", Json::array({entry})}}, Json()));
          } else if constexpr (std::is_same_v<T, ir::Finish>) {
            frames.push_back(chunk_frame(ctx, Json::object(),
                                         Json(finish_to_chat_stream(e.finish_reason))));
          } else if constexpr (std::is_same_v<T, ir::Usage>) {
            Json chunk = envelope(ctx);
            chunk["choices"] = Json::array();
            chunk["usage"] = usage_to_chat(e.usage, Json());
            frames.push_back(sse::SseFrame{std::nullopt, chunk.dump()});
          } else if constexpr (std::is_same_v<T, ir::StreamEnd>) {
            frames.push_back(sse::SseFrame{std::nullopt, "[DONE]"});
          }
          // Block start/end events are implicit in the chat dialect.
        },
        event);
    return frames;
  }

  sse::SseFrame error_frame(const std::string& message) const override {
    Json err{{"error", Json{{"message", message}, {"type", "upstream_error"}}}};
    return {std::nullopt, err.dump()};
  }

private:
  Json& ensure_cursor(StreamContext& ctx) {
    if (!ctx.provider_cursor.is_object()) {
      ctx.provider_cursor = Json{{"tool_count", 0},
                                 {"tool_map", Json::object()},
                                 {"warned_reasoning", false}};
    }
    return ctx.provider_cursor;
  }

  Json envelope(const StreamContext& ctx) const {
    const auto& start = ctx.stream_start;
    Json chunk = Json::object();
    chunk["id"] = start && !start->response_id.empty() ? start->response_id : "chatcmpl-0";
    chunk["object"] = "chat.completion.chunk";
    chunk["created"] = start ? start->created : 0;
    chunk["model"] = start ? start->model : "";
    return chunk;
  }

  sse::SseFrame chunk_frame(const StreamContext& ctx, Json delta, Json finish) const {
    Json chunk = envelope(ctx);
    Json choice{{"index", 0}, {"delta", std::move(delta)}};
    choice["finish_reason"] = finish.is_null() ? Json() : finish;
    chunk["choices"] = Json::array({std::move(choice)});
    return {std::nullopt, chunk.dump()};
  }
};

} // namespace

// ------------------------------------------------------------------
// Converter
// ------------------------------------------------------------------

OpenAIChatConverter::OpenAIChatConverter()
    : BaseConverter(std::make_unique<ChatContentOps>(), std::make_unique<ChatMessageOps>(),
                    std::make_unique<ChatToolOps>(), std::make_unique<ChatConfigOps>()) {}

ir::IRResponse OpenAIChatConverter::response_from_provider(const Json& body,
                                                           convert::ConversionContext& ctx) const {
  FieldMap fields(body, "$");
  ir::IRResponse out;
  if (const auto* id = fields.take("id")) out.id = require_string(*id, fields.key_path("id"));
  if (const auto* created = fields.take("created")) {
    out.created = require_int(*created, fields.key_path("created"));
  }
  if (const auto* model = fields.take("model")) {
    out.model = require_string(*model, fields.key_path("model"));
  }
  if (const auto* object = fields.take("object")) {
    if (!object->is_string() || object->get<std::string>() != "chat.completion") {
      if (ctx.preserve()) convert::set_metadata_entry(out.provider_metadata, kFmt, "object", *object);
      else ctx.warn(WarningCode::dropped_provider_feature, "nonstandard object value dropped",
                    fields.key_path("object"));
    }
  }

  const auto* choices = fields.take("choices");
  if (!choices) throw errors::MalformedInput("response missing 'choices'", "$");
  const auto& arr = require_array(*choices, fields.key_path("choices"));
  if (arr.empty()) throw errors::MalformedInput("choices must be non-empty", fields.key_path("choices"));
  ChatMessageOps message_ops;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto path = ju::index_path(fields.key_path("choices"), i);
    FieldMap cf(arr[i], path);
    ir::ChoiceInfo choice;
    if (const auto* index = cf.take("index")) {
      choice.index = require_int(*index, cf.key_path("index"));
    } else {
      choice.index = static_cast<std::int64_t>(i);
    }
    const auto* message = cf.take("message");
    if (!message) throw errors::MalformedInput("choice missing 'message'", path);
    auto parsed = message_ops.parse_message(*message, cf.key_path("message"), ctx);
    if (!std::holds_alternative<ir::AssistantMessage>(parsed)) {
      throw errors::MalformedInput("choice message must have role assistant",
                                   cf.key_path("message"));
    }
    choice.message = std::get<ir::AssistantMessage>(std::move(parsed));
    const auto* finish = cf.take("finish_reason");
    if (!finish || !finish->is_string()) {
      throw errors::MalformedInput("choice missing 'finish_reason'", path);
    }
    choice.finish_reason = finish_from_chat(finish->get<std::string>(), choice.provider_metadata,
                                            ctx, cf.key_path("finish_reason"));
    convert::route_leftovers(cf, choice.provider_metadata, ctx, kFmt);
    out.choices.push_back(std::move(choice));
  }

  if (const auto* usage = fields.take("usage")) {
    if (usage->is_object()) {
      out.usage = usage_from_chat(*usage, fields.key_path("usage"), out.provider_metadata, ctx);
    }
  }
  convert::route_leftovers(fields, out.provider_metadata, ctx, kFmt);
  return out;
}

Json OpenAIChatConverter::response_to_provider(const ir::IRResponse& response,
                                               convert::ConversionContext& ctx) const {
  Json body = Json::object();
  body["id"] = response.id;
  body["object"] = "chat.completion";
  body["created"] = response.created;
  body["model"] = response.model;
  ChatMessageOps message_ops;
  Json choices = Json::array();
  for (const auto& choice : response.choices) {
    Json cj = Json::object();
    cj["index"] = choice.index;
    cj["message"] = message_ops.assistant_to_chat(choice.message.content, choice.message.metadata,
                                                  ctx, /*response_shape=*/true);
    cj["finish_reason"] = finish_to_chat(choice.finish_reason, choice.provider_metadata, ctx);
    Json sink = choice.provider_metadata;
    if (sink.is_object()) {
      if (auto ns = sink.find(ir::format_name(kFmt)); ns != sink.end() && ns->is_object()) {
        ns->erase("finish_reason_raw");
        if (ns->empty()) sink.erase(std::string(ir::format_name(kFmt)));
      }
    }
    convert::restore_metadata(sink, kFmt, cj, ctx, "choice");
    choices.push_back(std::move(cj));
  }
  body["choices"] = std::move(choices);
  if (response.usage) body["usage"] = usage_to_chat(*response.usage, response.provider_metadata);

  Json sink = response.provider_metadata;
  if (sink.is_object()) {
    if (auto ns = sink.find(ir::format_name(kFmt)); ns != sink.end() && ns->is_object()) {
      if (auto obj = ns->find("object"); obj != ns->end()) {
        body["object"] = *obj;
        ns->erase("object");
      }
      ns->erase("usage_total_tokens");
      ns->erase("usage_prompt_details_extra");
      ns->erase("usage_completion_details_extra");
      if (ns->empty()) sink.erase(std::string(ir::format_name(kFmt)));
    }
  }
  convert::restore_metadata(sink, kFmt, body, ctx, "response");
  return body;
}

std::unique_ptr<convert::StreamDecoder> OpenAIChatConverter::make_stream_decoder() const {
  return std::make_unique<ChatStreamDecoder>();
}

std::unique_ptr<convert::StreamEncoder> OpenAIChatConverter::make_stream_encoder() const {
  return std::make_unique<ChatStreamEncoder>();
}

std::shared_ptr<const convert::Converter> make_openai_chat_converter() {
  return std::make_shared<OpenAIChatConverter>();
}

} // namespace rosetta::providers
