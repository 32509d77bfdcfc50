#pragma once

#include <memory>

#include "rosetta/convert/converter.hpp"

namespace rosetta::providers {

/// Anthropic Messages: top-level system parameter, block-typed content
/// arrays, tool results inside user-role messages, explicit streaming
/// lifecycle events, required max_tokens.
class AnthropicConverter : public convert::BaseConverter {
public:
  // Inserted when an IR request carries no max_tokens; the API requires it.
  static constexpr std::int64_t kDefaultMaxTokens = 4096;

  AnthropicConverter();

  ir::ProviderFormat format() const override { return ir::ProviderFormat::anthropic; }
  sse::Dialect sse_dialect() const override { return sse::Dialect::anthropic; }

  Json response_to_provider(const ir::IRResponse& response,
                            convert::ConversionContext& ctx) const override;
  ir::IRResponse response_from_provider(const Json& body,
                                        convert::ConversionContext& ctx) const override;

  std::unique_ptr<convert::StreamDecoder> make_stream_decoder() const override;
  std::unique_ptr<convert::StreamEncoder> make_stream_encoder() const override;
};

std::shared_ptr<const convert::Converter> make_anthropic_converter();

} // namespace rosetta::providers
