#pragma once

#include <memory>

#include "rosetta/convert/converter.hpp"

namespace rosetta::providers {

/// OpenAI Responses: items-based input/output where tool calls, reasoning
/// and text are sibling items, top-level instructions, item-level
/// streaming events. Shares the image/file part codecs with the Chat
/// converter and nothing else.
class OpenAIResponsesConverter : public convert::BaseConverter {
public:
  OpenAIResponsesConverter();

  ir::ProviderFormat format() const override { return ir::ProviderFormat::openai_responses; }
  sse::Dialect sse_dialect() const override { return sse::Dialect::anthropic; } // event+data frames

  Json response_to_provider(const ir::IRResponse& response,
                            convert::ConversionContext& ctx) const override;
  ir::IRResponse response_from_provider(const Json& body,
                                        convert::ConversionContext& ctx) const override;

  std::unique_ptr<convert::StreamDecoder> make_stream_decoder() const override;
  std::unique_ptr<convert::StreamEncoder> make_stream_encoder() const override;
};

std::shared_ptr<const convert::Converter> make_openai_responses_converter();

} // namespace rosetta::providers
