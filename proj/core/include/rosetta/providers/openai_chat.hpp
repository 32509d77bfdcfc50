#pragma once

#include <memory>

#include "rosetta/convert/converter.hpp"

namespace rosetta::providers {

/// OpenAI Chat Completions: string-or-parts message content, assistant
/// tool_calls[] with JSON-encoded argument strings, delta-chunk streaming
/// with implicit block boundaries and a [DONE] sentinel.
class OpenAIChatConverter : public convert::BaseConverter {
public:
  OpenAIChatConverter();

  ir::ProviderFormat format() const override { return ir::ProviderFormat::openai_chat; }
  sse::Dialect sse_dialect() const override { return sse::Dialect::openai; }

  Json response_to_provider(const ir::IRResponse& response,
                            convert::ConversionContext& ctx) const override;
  ir::IRResponse response_from_provider(const Json& body,
                                        convert::ConversionContext& ctx) const override;

  std::unique_ptr<convert::StreamDecoder> make_stream_decoder() const override;
  std::unique_ptr<convert::StreamEncoder> make_stream_encoder() const override;
};

std::shared_ptr<const convert::Converter> make_openai_chat_converter();

} // namespace rosetta::providers
