#pragma once

#include <memory>

#include "rosetta/convert/converter.hpp"

namespace rosetta::providers {

/// Google GenAI: contents[]/parts[] nesting, user/model roles,
/// generationConfig envelope, systemInstruction, id-less function calls,
/// and accumulated streaming candidates that need differencing.
class GoogleGenAIConverter : public convert::BaseConverter {
public:
  GoogleGenAIConverter();

  ir::ProviderFormat format() const override { return ir::ProviderFormat::google; }
  sse::Dialect sse_dialect() const override { return sse::Dialect::google; }

  Json response_to_provider(const ir::IRResponse& response,
                            convert::ConversionContext& ctx) const override;
  ir::IRResponse response_from_provider(const Json& body,
                                        convert::ConversionContext& ctx) const override;

  std::unique_ptr<convert::StreamDecoder> make_stream_decoder() const override;
  std::unique_ptr<convert::StreamEncoder> make_stream_encoder() const override;

protected:
  void request_envelope_from_provider(convert::FieldMap& body, ir::IRRequest& out,
                                      convert::ConversionContext& ctx) const override;
  void request_envelope_to_provider(const ir::IRRequest& request, Json& body,
                                    convert::ConversionContext& ctx) const override;
};

std::shared_ptr<const convert::Converter> make_google_genai_converter();

} // namespace rosetta::providers
