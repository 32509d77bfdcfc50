#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rosetta::ir {

/// The four wire formats this release translates between.
enum class ProviderFormat {
  openai_chat,
  openai_responses,
  anthropic,
  google,
};

inline constexpr ProviderFormat kAllFormats[] = {
    ProviderFormat::openai_chat,
    ProviderFormat::openai_responses,
    ProviderFormat::anthropic,
    ProviderFormat::google,
};

constexpr std::string_view format_name(ProviderFormat f) {
  switch (f) {
    case ProviderFormat::openai_chat: return "openai_chat";
    case ProviderFormat::openai_responses: return "openai_responses";
    case ProviderFormat::anthropic: return "anthropic";
    case ProviderFormat::google: return "google";
  }
  return "unknown";
}

inline std::optional<ProviderFormat> parse_format(std::string_view name) {
  for (auto f : kAllFormats) {
    if (format_name(f) == name) return f;
  }
  return std::nullopt;
}

} // namespace rosetta::ir
