#pragma once

#include <memory>

#include "rosetta/convert/converter.hpp"

namespace rosetta::convert {

enum class PayloadKind { request, response };

/// Immutable set of converters keyed by format. Composes two of them into
/// the cross-provider pipeline: source -> IR -> target.
class Registry {
public:
  void add(std::shared_ptr<const Converter> converter);
  const Converter& get(ir::ProviderFormat format) const; // throws UnknownFormat
  const Converter* find(ir::ProviderFormat format) const;

  /// translate == target.to_provider(source.from_provider(body)); warnings
  /// from both legs accumulate in `ctx`.
  Json translate(const Json& body, ir::ProviderFormat source, ir::ProviderFormat target,
                 PayloadKind kind, ConversionContext& ctx) const;

  Json translate(const Json& body, ir::ProviderFormat source, ir::ProviderFormat target,
                 PayloadKind kind, MetadataMode mode) const;

private:
  std::array<std::shared_ptr<const Converter>, 4> converters_{};
};

/// Registry preloaded with the four supported formats. The instance is
/// immutable and safe to share across threads.
const Registry& default_registry();

} // namespace rosetta::convert
