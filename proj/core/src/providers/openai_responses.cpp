#include "rosetta/providers/openai_responses.hpp"
#include "common.hpp"

namespace rosetta::providers {
OpenAIResponsesConverter::OpenAIResponsesConverter()
    : BaseConverter(nullptr, nullptr, nullptr, nullptr) {}
Json OpenAIResponsesConverter::response_to_provider(const ir::IRResponse&, convert::ConversionContext&) const { return {}; }
ir::IRResponse OpenAIResponsesConverter::response_from_provider(const Json&, convert::ConversionContext&) const { return {}; }
std::unique_ptr<convert::StreamDecoder> OpenAIResponsesConverter::make_stream_decoder() const { return nullptr; }
std::unique_ptr<convert::StreamEncoder> OpenAIResponsesConverter::make_stream_encoder() const { return nullptr; }
std::shared_ptr<const convert::Converter> make_openai_responses_converter() { return std::make_shared<OpenAIResponsesConverter>(); }
}
