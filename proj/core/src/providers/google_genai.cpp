#include "rosetta/providers/google_genai.hpp"
#include "common.hpp"

namespace rosetta::providers {
GoogleGenAIConverter::GoogleGenAIConverter()
    : BaseConverter(nullptr, nullptr, nullptr, nullptr) {}
void GoogleGenAIConverter::request_envelope_from_provider(convert::FieldMap&, ir::IRRequest&, convert::ConversionContext&) const {}
void GoogleGenAIConverter::request_envelope_to_provider(const ir::IRRequest&, Json&, convert::ConversionContext&) const {}
Json GoogleGenAIConverter::response_to_provider(const ir::IRResponse&, convert::ConversionContext&) const { return {}; }
ir::IRResponse GoogleGenAIConverter::response_from_provider(const Json&, convert::ConversionContext&) const { return {}; }
std::unique_ptr<convert::StreamDecoder> GoogleGenAIConverter::make_stream_decoder() const { return nullptr; }
std::unique_ptr<convert::StreamEncoder> GoogleGenAIConverter::make_stream_encoder() const { return nullptr; }
std::shared_ptr<const convert::Converter> make_google_genai_converter() { return std::make_shared<GoogleGenAIConverter>(); }
}
