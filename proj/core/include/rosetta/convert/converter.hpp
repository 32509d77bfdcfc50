#pragma once

#include <memory>
#include <span>
#include <vector>

#include "rosetta/convert/context.hpp"
#include "rosetta/convert/errors.hpp"
#include "rosetta/ir/request.hpp"
#include "rosetta/ir/response.hpp"
#include "rosetta/ir/stream.hpp"
#include "rosetta/sse.hpp"

namespace rosetta::convert {

// ---------------------------------------------------------------------
// Ops interfaces. A converter is assembled from four orthogonal modules:
// content parts, message sequences, tool definitions, and generation
// config. Each module owns both directions of its slice of the format.
// ---------------------------------------------------------------------

/// Tracks which keys of a provider object have been consumed, so the
/// converter can route leftovers to metadata (preserve) or warnings
/// (strip) without per-field bookkeeping.
class FieldMap {
public:
  FieldMap(const Json& object, std::string json_path);

  /// Returns the value for `key` (marking it consumed) or nullptr.
  const Json* take(std::string_view key);
  bool has(std::string_view key) const;
  const Json& object() const { return *object_; }
  const std::string& path() const { return path_; }
  std::string key_path(std::string_view key) const;

  /// Keys never taken, in input order.
  std::vector<std::string> leftover_keys() const;

private:
  const Json* object_;
  std::string path_;
  std::vector<std::string> consumed_;
};

class ContentOps {
public:
  virtual ~ContentOps() = default;
  virtual std::vector<ir::ContentPart> parts_from_provider(const Json& content, ir::Role role,
                                                           const std::string& path,
                                                           ConversionContext& ctx) const = 0;
  virtual Json parts_to_provider(std::span<const ir::ContentPart> parts, ir::Role role,
                                 ConversionContext& ctx) const = 0;
};

class MessageOps {
public:
  virtual ~MessageOps() = default;
  // Full request-level handling: messages plus wherever this format keeps
  // the system instruction (in-array role, top-level param, ...).
  virtual void request_messages_from_provider(FieldMap& body, ir::IRRequest& out,
                                              ConversionContext& ctx) const = 0;
  virtual void request_messages_to_provider(const ir::IRRequest& request, Json& body,
                                            ConversionContext& ctx) const = 0;
  // Message-array-only subset used by the convenience entry points.
  virtual std::vector<ir::Message> messages_from_provider(const Json& messages,
                                                          ConversionContext& ctx) const = 0;
  virtual Json messages_to_provider(std::span<const ir::Message> messages,
                                    ConversionContext& ctx) const = 0;
};

class ToolOps {
public:
  virtual ~ToolOps() = default;
  virtual void tools_from_provider(FieldMap& body, ir::IRRequest& out,
                                   ConversionContext& ctx) const = 0;
  virtual void tools_to_provider(const ir::IRRequest& request, Json& body,
                                 ConversionContext& ctx) const = 0;
};

class ConfigOps {
public:
  virtual ~ConfigOps() = default;
  virtual void config_from_provider(FieldMap& body, ir::IRRequest& out,
                                    ConversionContext& ctx) const = 0;
  virtual void config_to_provider(const ir::IRRequest& request, Json& body,
                                  ConversionContext& ctx) const = 0;
};

// ---------------------------------------------------------------------
// Streaming translators. Decoders turn provider SSE frames into IR
// events; encoders do the reverse. Both are incremental: every input
// yields its output immediately, so relay latency is bounded by per-chunk
// work. State lives in the StreamContext, never in the translator.
// ---------------------------------------------------------------------

class StreamDecoder {
public:
  virtual ~StreamDecoder() = default;
  virtual std::vector<ir::StreamEvent> on_frame(const sse::SseFrame& frame,
                                                StreamContext& ctx) = 0;
  /// Upstream closed. Finalizes the stream (closing open blocks and
  /// draining deferred events) if the provider's own terminator never
  /// arrived. Idempotent.
  virtual std::vector<ir::StreamEvent> on_close(StreamContext& ctx) = 0;
  bool finished() const { return finished_; }

protected:
  bool finished_ = false;
};

class StreamEncoder {
public:
  virtual ~StreamEncoder() = default;
  virtual std::vector<sse::SseFrame> on_event(const ir::StreamEvent& event,
                                              StreamContext& ctx) = 0;
  /// Dialect-appropriate error frame for mid-stream failures.
  virtual sse::SseFrame error_frame(const std::string& message) const = 0;
};

// ---------------------------------------------------------------------
// Converter contract: six entry points plus two message-level
// conveniences. Converters are immutable and hold no per-conversion
// state; everything mutable lives in the context.
// ---------------------------------------------------------------------

class Converter {
public:
  virtual ~Converter() = default;

  virtual ir::ProviderFormat format() const = 0;
  virtual sse::Dialect sse_dialect() const = 0;

  virtual Json request_to_provider(const ir::IRRequest& request, ConversionContext& ctx) const = 0;
  virtual ir::IRRequest request_from_provider(const Json& body, ConversionContext& ctx) const = 0;
  virtual Json response_to_provider(const ir::IRResponse& response, ConversionContext& ctx) const = 0;
  virtual ir::IRResponse response_from_provider(const Json& body, ConversionContext& ctx) const = 0;

  virtual Json messages_to_provider(std::span<const ir::Message> messages,
                                    ConversionContext& ctx) const = 0;
  virtual std::vector<ir::Message> messages_from_provider(const Json& messages,
                                                          ConversionContext& ctx) const = 0;

  virtual std::unique_ptr<StreamDecoder> make_stream_decoder() const = 0;
  virtual std::unique_ptr<StreamEncoder> make_stream_encoder() const = 0;

  /// Batch forms of the streaming entry points: feed every chunk through
  /// the incremental translator, then close.
  std::vector<ir::StreamEvent> stream_response_from_provider(std::span<const sse::SseFrame> chunks,
                                                             StreamContext& ctx) const;
  std::vector<sse::SseFrame> stream_response_to_provider(std::span<const ir::StreamEvent> events,
                                                         StreamContext& ctx) const;
};

/// Base class wiring the four Ops modules into the request pipeline.
/// Response envelopes differ too much across providers to share; concrete
/// converters implement those directly on top of their ContentOps.
class BaseConverter : public Converter {
public:
  Json request_to_provider(const ir::IRRequest& request, ConversionContext& ctx) const override;
  ir::IRRequest request_from_provider(const Json& body, ConversionContext& ctx) const override;

  Json messages_to_provider(std::span<const ir::Message> messages,
                            ConversionContext& ctx) const override;
  std::vector<ir::Message> messages_from_provider(const Json& messages,
                                                  ConversionContext& ctx) const override;

protected:
  BaseConverter(std::unique_ptr<ContentOps> content, std::unique_ptr<MessageOps> message,
                std::unique_ptr<ToolOps> tool, std::unique_ptr<ConfigOps> config);

  const ContentOps& content_ops() const { return *content_ops_; }
  const MessageOps& message_ops() const { return *message_ops_; }
  const ToolOps& tool_ops() const { return *tool_ops_; }
  const ConfigOps& config_ops() const { return *config_ops_; }

  /// Envelope hooks for the few request keys with per-provider meaning
  /// that the ops modules do not own. The defaults read and emit a
  /// required top-level "model"; Google overrides (its model usually
  /// rides in the URL).
  virtual void request_envelope_from_provider(FieldMap& body, ir::IRRequest& out,
                                              ConversionContext& ctx) const;
  virtual void request_envelope_to_provider(const ir::IRRequest& request, Json& body,
                                            ConversionContext& ctx) const;

private:
  std::unique_ptr<ContentOps> content_ops_;
  std::unique_ptr<MessageOps> message_ops_;
  std::unique_ptr<ToolOps> tool_ops_;
  std::unique_ptr<ConfigOps> config_ops_;
};

// ---------------------------------------------------------------------
// Shared helpers for metadata-mode handling.
// ---------------------------------------------------------------------

/// Routes keys never consumed from a provider object: preserve mode
/// stores them verbatim under sink[<format-name>][<key>]; strip mode
/// records one warning per key. `ns` is the format being parsed.
void route_leftovers(FieldMap& fields, Json& metadata_sink, ConversionContext& ctx,
                     ir::ProviderFormat ns,
                     WarningCode code = WarningCode::dropped_provider_feature);

/// Restores preserve-mode metadata for `target` from a sink written by
/// route_leftovers, and warns about foreign-format namespaces it ignores.
void restore_metadata(const Json& metadata_sink, ir::ProviderFormat target, Json& out,
                      ConversionContext& ctx, const std::string& path);

/// Looks up sink[<format-name>][<key>]; null when absent.
const Json* metadata_entry(const Json& sink, ir::ProviderFormat format, std::string_view key);

/// Writes sink[<format-name>][<key>] = value.
void set_metadata_entry(Json& sink, ir::ProviderFormat format, std::string_view key, Json value);

} // namespace rosetta::convert
