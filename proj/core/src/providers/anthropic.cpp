#include "rosetta/providers/anthropic.hpp"
#include "common.hpp"

namespace rosetta::providers {
AnthropicConverter::AnthropicConverter()
    : BaseConverter(nullptr, nullptr, nullptr, nullptr) {}
Json AnthropicConverter::response_to_provider(const ir::IRResponse&, convert::ConversionContext&) const { return {}; }
ir::IRResponse AnthropicConverter::response_from_provider(const Json&, convert::ConversionContext&) const { return {}; }
std::unique_ptr<convert::StreamDecoder> AnthropicConverter::make_stream_decoder() const { return nullptr; }
std::unique_ptr<convert::StreamEncoder> AnthropicConverter::make_stream_encoder() const { return nullptr; }
std::shared_ptr<const convert::Converter> make_anthropic_converter() { return std::make_shared<AnthropicConverter>(); }
}
