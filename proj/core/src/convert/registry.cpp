#include "rosetta/convert/registry.hpp"

#include "rosetta/providers/anthropic.hpp"
#include "rosetta/providers/google_genai.hpp"
#include "rosetta/providers/openai_chat.hpp"
#include "rosetta/providers/openai_responses.hpp"

namespace rosetta::convert {

void Registry::add(std::shared_ptr<const Converter> converter) {
  converters_[static_cast<std::size_t>(converter->format())] = std::move(converter);
}

const Converter* Registry::find(ir::ProviderFormat format) const {
  return converters_[static_cast<std::size_t>(format)].get();
}

const Converter& Registry::get(ir::ProviderFormat format) const {
  const auto* c = find(format);
  if (!c) {
    throw errors::UnknownFormat("no converter registered for '" +
                                std::string(ir::format_name(format)) + "'");
  }
  return *c;
}

Json Registry::translate(const Json& body, ir::ProviderFormat source, ir::ProviderFormat target,
                         PayloadKind kind, ConversionContext& ctx) const {
  const auto& from = get(source);
  const auto& to = get(target);
  if (kind == PayloadKind::request) {
    auto ir = from.request_from_provider(body, ctx);
    return to.request_to_provider(ir, ctx);
  }
  auto ir = from.response_from_provider(body, ctx);
  return to.response_to_provider(ir, ctx);
}

Json Registry::translate(const Json& body, ir::ProviderFormat source, ir::ProviderFormat target,
                         PayloadKind kind, MetadataMode mode) const {
  ConversionContext ctx(mode, source, target);
  return translate(body, source, target, kind, ctx);
}

const Registry& default_registry() {
  static const Registry registry = [] {
    Registry r;
    r.add(providers::make_openai_chat_converter());
    r.add(providers::make_anthropic_converter());
    r.add(providers::make_google_genai_converter());
    r.add(providers::make_openai_responses_converter());
    return r;
  }();
  return registry;
}

} // namespace rosetta::convert
