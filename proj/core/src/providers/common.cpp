#include "common.hpp"

#include <algorithm>

namespace rosetta::providers::common {

using jsonutil::key_path;
using jsonutil::require_object;
using jsonutil::require_string;

std::optional<std::pair<std::string, std::string>> parse_data_url(const std::string& url) {
  constexpr std::string_view prefix = "data:";
  if (url.rfind(prefix, 0) != 0) return std::nullopt;
  auto marker = url.find(";base64,");
  if (marker == std::string::npos) return std::nullopt;
  return std::make_pair(url.substr(prefix.size(), marker - prefix.size()),
                        url.substr(marker + 8));
}

std::string make_data_url(const std::string& media_type, const std::string& base64) {
  return "data:" + media_type + ";base64," + base64;
}

std::string guess_media_type(const std::string& url) {
  auto clean = url.substr(0, std::min(url.find('?'), url.find('#')));
  auto dot = clean.rfind('.');
  if (dot == std::string::npos) return "";
  std::string ext = clean.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == "png") return "image/png";
  if (ext == "jpg" || ext == "jpeg") return "image/jpeg";
  if (ext == "gif") return "image/gif";
  if (ext == "webp") return "image/webp";
  if (ext == "pdf") return "application/pdf";
  return "";
}

void set_custom(ir::MessageMetadata& meta, ir::ProviderFormat format, std::string_view key,
                Json value) {
  if (!meta.custom.is_object()) meta.custom = Json::object();
  meta.custom[std::string(ir::format_name(format))][std::string(key)] = std::move(value);
}

const Json* get_custom(const ir::MessageMetadata& meta, ir::ProviderFormat format,
                       std::string_view key) {
  if (!meta.custom.is_object()) return nullptr;
  auto ns = meta.custom.find(ir::format_name(format));
  if (ns == meta.custom.end() || !ns->is_object()) return nullptr;
  auto it = ns->find(key);
  return it == ns->end() ? nullptr : &*it;
}

void set_shape(ir::IRRequest& request, ir::ProviderFormat format, std::string_view key,
               Json value) {
  if (!request.provider_extensions.is_object()) request.provider_extensions = Json::object();
  request.provider_extensions[std::string(ir::format_name(format))]["__shape__"]
                             [std::string(key)] = std::move(value);
}

const Json* get_shape(const ir::IRRequest& request, ir::ProviderFormat format,
                      std::string_view key) {
  const auto* shape = convert::metadata_entry(request.provider_extensions, format, "__shape__");
  if (!shape || !shape->is_object()) return nullptr;
  auto it = shape->find(key);
  return it == shape->end() ? nullptr : &*it;
}

bool all_text(std::span<const ir::ContentPart> parts) {
  return std::all_of(parts.begin(), parts.end(), [](const ir::ContentPart& p) {
    return std::holds_alternative<ir::TextPart>(p);
  });
}

std::string joined_text(std::span<const ir::ContentPart> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (const auto* t = std::get_if<ir::TextPart>(&p)) out += t->text;
  }
  return out;
}

std::optional<ir::ImageDetail> parse_image_detail(const std::string& s) {
  if (s == "low") return ir::ImageDetail::low;
  if (s == "high") return ir::ImageDetail::high;
  if (s == "auto") return ir::ImageDetail::auto_;
  return std::nullopt;
}

std::string_view image_detail_name(ir::ImageDetail d) {
  switch (d) {
    case ir::ImageDetail::low: return "low";
    case ir::ImageDetail::high: return "high";
    case ir::ImageDetail::auto_: return "auto";
  }
  return "auto";
}

ir::ImagePart image_from_openai_url(const Json& image_url, const std::string& path,
                                    convert::ConversionContext& ctx, ir::ProviderFormat ns) {
  ir::ImagePart part;
  const auto& obj = require_object(image_url, path);
  convert::FieldMap fields(obj, path);
  auto url = require_string(*[&] {
    const auto* u = fields.take("url");
    if (!u) jsonutil::fail("image_url missing 'url'", path);
    return u;
  }(), key_path(path, "url"));
  if (auto data = parse_data_url(url)) {
    part.source = {ir::BlobSource::Kind::base64, data->second};
    part.media_type = data->first;
  } else {
    part.source = {ir::BlobSource::Kind::url, url};
    part.media_type = guess_media_type(url);
  }
  if (const auto* d = fields.take("detail")) {
    auto detail = parse_image_detail(require_string(*d, key_path(path, "detail")));
    if (!detail) jsonutil::fail("unknown image detail", key_path(path, "detail"));
    part.detail = detail;
  }
  convert::route_leftovers(fields, part.provider_metadata, ctx, ns);
  return part;
}

Json image_to_openai_url(const ir::ImagePart& image, convert::ConversionContext& ctx,
                         ir::ProviderFormat ns) {
  Json inner = Json::object();
  if (image.source.kind == ir::BlobSource::Kind::base64) {
    inner["url"] = make_data_url(image.media_type, image.source.value);
  } else {
    inner["url"] = image.source.value;
  }
  if (image.detail) inner["detail"] = std::string(image_detail_name(*image.detail));
  convert::restore_metadata(image.provider_metadata, ns, inner, ctx, "image_url");
  return inner;
}

ir::FilePart file_from_openai(const Json& file, const std::string& path,
                              convert::ConversionContext& ctx, ir::ProviderFormat ns) {
  ir::FilePart part;
  const auto& obj = require_object(file, path);
  convert::FieldMap fields(obj, path);
  if (const auto* fd = fields.take("file_data")) {
    auto data = require_string(*fd, key_path(path, "file_data"));
    if (auto parsed = parse_data_url(data)) {
      part.source = {ir::BlobSource::Kind::base64, parsed->second};
      part.media_type = parsed->first;
    } else {
      // Bare base64 without the data: wrapper.
      part.source = {ir::BlobSource::Kind::base64, data};
      part.media_type = "application/octet-stream";
      if (ctx.preserve()) {
        convert::set_metadata_entry(part.provider_metadata, ns, "file_data_bare", true);
      }
    }
  } else if (const auto* id = fields.take("file_id")) {
    // Provider-hosted file reference; representable only as metadata.
    part.media_type = "application/octet-stream";
    if (ctx.preserve()) {
      convert::set_metadata_entry(part.provider_metadata, ns, "file_id",
                                  require_string(*id, key_path(path, "file_id")));
    } else {
      ctx.warn(convert::WarningCode::dropped_provider_feature, "dropped provider field 'file_id'",
               key_path(path, "file_id"));
    }
  }
  if (const auto* name = fields.take("filename")) {
    part.filename = require_string(*name, key_path(path, "filename"));
  }
  convert::route_leftovers(fields, part.provider_metadata, ctx, ns);
  return part;
}

Json file_to_openai(const ir::FilePart& file, convert::ConversionContext& ctx,
                    ir::ProviderFormat ns) {
  Json inner = Json::object();
  if (file.filename) inner["filename"] = *file.filename;
  if (const auto* id = convert::metadata_entry(file.provider_metadata, ns, "file_id")) {
    inner["file_id"] = *id;
  } else if (file.source.kind == ir::BlobSource::Kind::base64) {
    if (convert::metadata_entry(file.provider_metadata, ns, "file_data_bare")) {
      inner["file_data"] = file.source.value;
    } else {
      inner["file_data"] = make_data_url(file.media_type, file.source.value);
    }
  } else {
    // URL-referenced files have no chat-shape carrier; pass the URL through.
    inner["file_data"] = file.source.value;
    ctx.warn(convert::WarningCode::unsupported_content,
             "url-referenced file emitted as file_data passthrough");
  }
  Json sink = file.provider_metadata;
  if (sink.is_object()) {
    auto ns_name = std::string(ir::format_name(ns));
    if (auto it = sink.find(ns_name); it != sink.end() && it->is_object()) {
      it->erase("file_id");
      it->erase("file_data_bare");
      if (it->empty()) sink.erase(ns_name);
    }
  }
  convert::restore_metadata(sink, ns, inner, ctx, "file");
  return inner;
}

} // namespace rosetta::providers::common
