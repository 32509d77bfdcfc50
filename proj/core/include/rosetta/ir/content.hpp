#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rosetta/json.hpp"

namespace rosetta::ir {

/// Where binary-ish content lives: carried inline as base64 or referenced
/// by URL. `value` holds the base64 payload or the URL accordingly.
struct BlobSource {
  enum class Kind { base64, url };
  Kind kind = Kind::base64;
  std::string value;

  friend bool operator==(const BlobSource&, const BlobSource&) = default;
};

enum class ImageDetail { low, high, auto_ };

struct TextPart {
  std::string text;
  Json provider_metadata; // null when unset

  friend bool operator==(const TextPart&, const TextPart&) = default;
};

struct ImagePart {
  BlobSource source;
  std::string media_type;
  std::optional<ImageDetail> detail;
  Json provider_metadata;

  friend bool operator==(const ImagePart&, const ImagePart&) = default;
};

struct AudioPart {
  std::string data; // base64
  std::string media_type;
  Json provider_metadata;

  friend bool operator==(const AudioPart&, const AudioPart&) = default;
};

struct FilePart {
  BlobSource source;
  std::string media_type;
  std::optional<std::string> filename;
  Json provider_metadata;

  friend bool operator==(const FilePart&, const FilePart&) = default;
};

struct ToolCallPart {
  std::string tool_call_id;
  std::string tool_name;
  Json tool_input = Json::object(); // always an object, never a string
  Json provider_metadata;

  friend bool operator==(const ToolCallPart&, const ToolCallPart&) = default;
};

struct ToolResultPart {
  std::string tool_call_id;
  // Text and image parts only; enforced by validation, not by the type.
  std::vector<std::variant<TextPart, ImagePart>> content;
  std::optional<bool> is_error;
  Json provider_metadata;

  friend bool operator==(const ToolResultPart&, const ToolResultPart&) = default;
};

struct ReasoningPart {
  std::string text;
  std::optional<std::string> signature; // opaque; round-tripped verbatim
  Json provider_metadata;

  friend bool operator==(const ReasoningPart&, const ReasoningPart&) = default;
};

struct RefusalPart {
  std::string reason;
  Json provider_metadata;

  friend bool operator==(const RefusalPart&, const RefusalPart&) = default;
};

struct CitationPart {
  struct Span {
    // Unicode scalar-value offsets into the cited text.
    std::int64_t start = 0;
    std::int64_t end = 0;
    friend bool operator==(const Span&, const Span&) = default;
  };
  std::optional<std::string> url;
  std::optional<std::string> quoted_text;
  std::optional<Span> span;
  Json provider_metadata;

  friend bool operator==(const CitationPart&, const CitationPart&) = default;
};

/// The nine atomic content kinds, discriminated by `type` on the wire.
using ContentPart = std::variant<TextPart, ImagePart, AudioPart, FilePart,
                                 ToolCallPart, ToolResultPart, ReasoningPart,
                                 RefusalPart, CitationPart>;

enum class PartKind {
  text,
  image,
  audio,
  file,
  tool_call,
  tool_result,
  reasoning,
  refusal,
  citation,
};

constexpr std::string_view part_kind_name(PartKind k) {
  switch (k) {
    case PartKind::text: return "text";
    case PartKind::image: return "image";
    case PartKind::audio: return "audio";
    case PartKind::file: return "file";
    case PartKind::tool_call: return "tool_call";
    case PartKind::tool_result: return "tool_result";
    case PartKind::reasoning: return "reasoning";
    case PartKind::refusal: return "refusal";
    case PartKind::citation: return "citation";
  }
  return "unknown";
}

inline PartKind part_kind(const ContentPart& p) {
  return static_cast<PartKind>(p.index());
}

/// Access to the variant-carried provider metadata without visiting by hand.
inline const Json& part_metadata(const ContentPart& p) {
  return std::visit([](const auto& v) -> const Json& { return v.provider_metadata; }, p);
}

inline Json& part_metadata(ContentPart& p) {
  return std::visit([](auto& v) -> Json& { return v.provider_metadata; }, p);
}

} // namespace rosetta::ir
