#include "rosetta/sse.hpp"

#include "rosetta/convert/errors.hpp"
#include "json_util.hpp"

namespace rosetta::jsonutil {

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const auto n = bytes.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int len;
    unsigned cp;
    if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07; }
    else return false;
    if (i + len > n) return false;
    for (int k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (len == 2 && cp < 0x80) return false;       // overlong
    if (len == 3 && cp < 0x800) return false;      // overlong
    if (len == 4 && cp < 0x10000) return false;    // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return false; // surrogate
    if (cp > 0x10FFFF) return false;
    i += len;
  }
  return true;
}

} // namespace rosetta::jsonutil

namespace rosetta::sse {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

std::string_view field_value(std::string_view line, std::size_t colon) {
  auto value = line.substr(colon + 1);
  if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
  return value;
}

} // namespace

std::vector<SseFrame> Parser::feed(std::string_view bytes) {
  buffer_.append(bytes);
  std::vector<SseFrame> frames;

  std::size_t start = 0;
  while (true) {
    auto nl = buffer_.find('\n', start);
    if (nl == std::string::npos) break;
    std::string_view line(buffer_.data() + start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    consume_line(line, frames);
    start = nl + 1;
  }
  buffer_.erase(0, start);
  return frames;
}

void Parser::consume_line(std::string_view line, std::vector<SseFrame>& out) {
  if (at_stream_start_) {
    at_stream_start_ = false;
    if (line.substr(0, kBom.size()) == kBom) line.remove_prefix(kBom.size());
  }
  if (line.empty()) {
    finish_frame(out);
    return;
  }
  if (line.front() == ':') {
    ++comment_lines_;
    return;
  }
  auto colon = line.find(':');
  std::string_view field = colon == std::string_view::npos ? line : line.substr(0, colon);
  std::string_view value = colon == std::string_view::npos ? "" : field_value(line, colon);
  if (field == "data") {
    data_lines_.emplace_back(value);
    saw_field_ = true;
  } else if (field == "event") {
    event_name_ = std::string(value);
    saw_field_ = true;
  } else if (field == "retry") {
    ++retry_lines_;
  } else if (field == "id") {
    // Last-Event-ID bookkeeping is out of scope; ignore.
  } else {
    // Unknown fields are ignored per the SSE processing model.
  }
}

void Parser::finish_frame(std::vector<SseFrame>& out) {
  if (!saw_field_) {
    // Blank line with no pending fields: frame separator noise.
    event_name_.reset();
    data_lines_.clear();
    return;
  }
  SseFrame frame;
  frame.event_name = event_name_;
  std::string data;
  for (std::size_t i = 0; i < data_lines_.size(); ++i) {
    if (i) data += '\n';
    data += data_lines_[i];
  }
  frame.data = std::move(data);
  if (!jsonutil::is_valid_utf8(frame.data) ||
      (frame.event_name && !jsonutil::is_valid_utf8(*frame.event_name))) {
    throw errors::EncodingError("SSE frame is not valid UTF-8");
  }
  event_name_.reset();
  data_lines_.clear();
  saw_field_ = false;
  out.push_back(std::move(frame));
}

bool Parser::has_partial() const { return !buffer_.empty() || saw_field_; }

std::string serialize(const SseFrame& frame, Dialect dialect) {
  if (!jsonutil::is_valid_utf8(frame.data)) {
    throw errors::EncodingError("frame data is not valid UTF-8");
  }
  std::string out;
  if (dialect == Dialect::anthropic) {
    if (!frame.event_name) {
      throw errors::MissingEventName("anthropic dialect frames require an event name");
    }
    out += "event: ";
    out += *frame.event_name;
    out += '\n';
  }
  // Multi-line data splits back into one data: line per segment, so the
  // parse/serialize pair is the identity.
  std::string_view rest = frame.data;
  while (true) {
    auto nl = rest.find('\n');
    out += "data: ";
    out += rest.substr(0, nl);
    out += '\n';
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  out += '\n';
  return out;
}

std::string serialize_close(Dialect dialect) {
  return dialect == Dialect::openai ? "data: [DONE]\n\n" : "";
}

bool is_done_sentinel(const SseFrame& frame) {
  std::string_view d = frame.data;
  while (!d.empty() && (d.front() == ' ' || d.front() == '\t')) d.remove_prefix(1);
  while (!d.empty() && (d.back() == ' ' || d.back() == '\t')) d.remove_suffix(1);
  return d == "[DONE]";
}

} // namespace rosetta::sse
