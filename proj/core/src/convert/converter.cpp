#include "rosetta/convert/converter.hpp"

#include <algorithm>

#include "../json_util.hpp"

namespace rosetta::convert {

using jsonutil::key_path;
using jsonutil::require_object;
using jsonutil::require_string;

// ---------------------------------------------------------------------
// FieldMap
// ---------------------------------------------------------------------

FieldMap::FieldMap(const Json& object, std::string json_path)
    : object_(&require_object(object, json_path)), path_(std::move(json_path)) {}

const Json* FieldMap::take(std::string_view key) {
  auto it = object_->find(key);
  if (it == object_->end()) return nullptr;
  consumed_.emplace_back(key);
  return &*it;
}

bool FieldMap::has(std::string_view key) const { return object_->contains(key); }

std::string FieldMap::key_path(std::string_view key) const {
  return jsonutil::key_path(path_, key);
}

std::vector<std::string> FieldMap::leftover_keys() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : object_->items()) {
    if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end()) {
      out.push_back(key);
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Metadata-mode helpers
// ---------------------------------------------------------------------

void route_leftovers(FieldMap& fields, Json& metadata_sink, ConversionContext& ctx,
                     ir::ProviderFormat ns_format, WarningCode code) {
  auto leftovers = fields.leftover_keys();
  if (leftovers.empty()) return;
  auto ns = std::string(ir::format_name(ns_format));
  for (const auto& key : leftovers) {
    if (ctx.preserve()) {
      if (!metadata_sink.is_object()) metadata_sink = Json::object();
      metadata_sink[ns][key] = fields.object().at(key);
    } else {
      ctx.warn(code, "dropped provider field '" + key + "'", fields.key_path(key));
    }
  }
}

void restore_metadata(const Json& metadata_sink, ir::ProviderFormat target, Json& out,
                      ConversionContext& ctx, const std::string& path) {
  if (!metadata_sink.is_object()) return;
  auto target_ns = std::string(ir::format_name(target));
  for (const auto& [ns, entries] : metadata_sink.items()) {
    if (ns == target_ns) {
      if (entries.is_object()) {
        for (const auto& [key, value] : entries.items()) {
          // Dunder keys are converter-internal markers, never wire fields.
          if (key.rfind("__", 0) == 0) continue;
          out[key] = value;
        }
      }
    } else {
      ctx.warn(WarningCode::foreign_metadata_ignored,
               "preserve-mode metadata for '" + ns + "' not representable in " + target_ns, path);
    }
  }
}

const Json* metadata_entry(const Json& sink, ir::ProviderFormat format, std::string_view key) {
  if (!sink.is_object()) return nullptr;
  auto ns = sink.find(ir::format_name(format));
  if (ns == sink.end() || !ns->is_object()) return nullptr;
  auto it = ns->find(key);
  return it == ns->end() ? nullptr : &*it;
}

void set_metadata_entry(Json& sink, ir::ProviderFormat format, std::string_view key, Json value) {
  if (!sink.is_object()) sink = Json::object();
  sink[std::string(ir::format_name(format))][std::string(key)] = std::move(value);
}

// ---------------------------------------------------------------------
// BaseConverter
// ---------------------------------------------------------------------

BaseConverter::BaseConverter(std::unique_ptr<ContentOps> content, std::unique_ptr<MessageOps> message,
                             std::unique_ptr<ToolOps> tool, std::unique_ptr<ConfigOps> config)
    : content_ops_(std::move(content)),
      message_ops_(std::move(message)),
      tool_ops_(std::move(tool)),
      config_ops_(std::move(config)) {}

void BaseConverter::request_envelope_from_provider(FieldMap& body, ir::IRRequest& out,
                                                   ConversionContext&) const {
  const Json* model = body.take("model");
  if (!model) throw errors::MalformedInput("request missing required 'model'", body.path());
  out.model = require_string(*model, body.key_path("model"));
}

void BaseConverter::request_envelope_to_provider(const ir::IRRequest& request, Json& body,
                                                 ConversionContext&) const {
  body["model"] = request.model;
}

ir::IRRequest BaseConverter::request_from_provider(const Json& body, ConversionContext& ctx) const {
  FieldMap fields(body, "$");
  ir::IRRequest out;
  request_envelope_from_provider(fields, out, ctx);
  config_ops_->config_from_provider(fields, out, ctx);
  tool_ops_->tools_from_provider(fields, out, ctx);
  message_ops_->request_messages_from_provider(fields, out, ctx);
  // Unknown top-level request keys ride in provider_extensions under the
  // source format's namespace; they re-emit only when the target format
  // matches. This holds in both metadata modes.
  auto ns = std::string(ir::format_name(format()));
  for (const auto& key : fields.leftover_keys()) {
    if (out.provider_extensions.is_null()) out.provider_extensions = Json::object();
    out.provider_extensions[ns][key] = fields.object().at(key);
  }
  return out;
}

Json BaseConverter::request_to_provider(const ir::IRRequest& request, ConversionContext& ctx) const {
  Json body = Json::object();
  request_envelope_to_provider(request, body, ctx);
  message_ops_->request_messages_to_provider(request, body, ctx);
  tool_ops_->tools_to_provider(request, body, ctx);
  config_ops_->config_to_provider(request, body, ctx);
  if (request.provider_extensions.is_object()) {
    auto target_ns = std::string(ir::format_name(format()));
    for (const auto& [ns, entries] : request.provider_extensions.items()) {
      if (ns == target_ns) {
        if (entries.is_object()) {
          for (const auto& [key, value] : entries.items()) {
            if (key.rfind("__", 0) == 0) continue; // converter-internal markers
            body[key] = value;
          }
        }
      } else {
        ctx.warn(WarningCode::dropped_provider_feature,
                 "extensions for '" + ns + "' not representable in " + target_ns,
                 "$.provider_extensions." + ns);
      }
    }
  }
  return body;
}

Json BaseConverter::messages_to_provider(std::span<const ir::Message> messages,
                                         ConversionContext& ctx) const {
  if (messages.empty()) {
    throw errors::MalformedInput("message list must be non-empty", "$");
  }
  return message_ops_->messages_to_provider(messages, ctx);
}

std::vector<ir::Message> BaseConverter::messages_from_provider(const Json& messages,
                                                               ConversionContext& ctx) const {
  const auto& arr = jsonutil::require_array(messages, "$");
  if (arr.empty()) {
    throw errors::MalformedInput("message array must be non-empty", "$");
  }
  return message_ops_->messages_from_provider(arr, ctx);
}

// ---------------------------------------------------------------------
// Batch streaming entry points
// ---------------------------------------------------------------------

std::vector<ir::StreamEvent> Converter::stream_response_from_provider(
    std::span<const sse::SseFrame> chunks, StreamContext& ctx) const {
  auto decoder = make_stream_decoder();
  std::vector<ir::StreamEvent> events;
  for (const auto& frame : chunks) {
    auto out = decoder->on_frame(frame, ctx);
    events.insert(events.end(), out.begin(), out.end());
  }
  auto out = decoder->on_close(ctx);
  events.insert(events.end(), out.begin(), out.end());
  return events;
}

std::vector<sse::SseFrame> Converter::stream_response_to_provider(
    std::span<const ir::StreamEvent> events, StreamContext& ctx) const {
  auto encoder = make_stream_encoder();
  std::vector<sse::SseFrame> frames;
  for (const auto& event : events) {
    auto out = encoder->on_event(event, ctx);
    frames.insert(frames.end(), out.begin(), out.end());
  }
  return frames;
}

} // namespace rosetta::convert
