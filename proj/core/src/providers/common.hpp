#pragma once

// Helpers shared across provider converters. Internal.

#include <optional>
#include <string>
#include <utility>

#include "rosetta/convert/converter.hpp"
#include "rosetta/ir/message.hpp"
#include "rosetta/ir/request.hpp"
#include "../json_util.hpp"

namespace rosetta::providers::common {

// "data:<media_type>;base64,<payload>" <-> (media_type, payload)
std::optional<std::pair<std::string, std::string>> parse_data_url(const std::string& url);
std::string make_data_url(const std::string& media_type, const std::string& base64);

/// Best-effort MIME type from a URL's extension; empty when unknown.
std::string guess_media_type(const std::string& url);

// Shape markers and other converter round-trip data live in
// MessageMetadata.custom under the source format's namespace; preserve
// mode only.
void set_custom(ir::MessageMetadata& meta, ir::ProviderFormat format, std::string_view key,
                Json value);
const Json* get_custom(const ir::MessageMetadata& meta, ir::ProviderFormat format,
                       std::string_view key);

/// True when every part is a TextPart.
bool all_text(std::span<const ir::ContentPart> parts);

/// Concatenation of all TextPart texts.
std::string joined_text(std::span<const ir::ContentPart> parts);

// Request-level shape markers (wire-shape variance that maps to the same
// IR) ride in provider_extensions[<format>]["__shape__"]; dunder keys are
// never re-emitted as wire fields.
void set_shape(ir::IRRequest& request, ir::ProviderFormat format, std::string_view key, Json value);
const Json* get_shape(const ir::IRRequest& request, ir::ProviderFormat format, std::string_view key);

// Image/file codecs for the OpenAI content-part shapes, shared between the
// Chat and Responses converters.
ir::ImagePart image_from_openai_url(const Json& image_url, const std::string& path,
                                    convert::ConversionContext& ctx, ir::ProviderFormat ns);
Json image_to_openai_url(const ir::ImagePart& image, convert::ConversionContext& ctx,
                         ir::ProviderFormat ns);
ir::FilePart file_from_openai(const Json& file, const std::string& path,
                              convert::ConversionContext& ctx, ir::ProviderFormat ns);
Json file_to_openai(const ir::FilePart& file, convert::ConversionContext& ctx,
                    ir::ProviderFormat ns);

std::optional<ir::ImageDetail> parse_image_detail(const std::string& s);
std::string_view image_detail_name(ir::ImageDetail d);

} // namespace rosetta::providers::common
