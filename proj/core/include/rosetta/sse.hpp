#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rosetta::sse {

/// The three SSE dialects in use: data-only frames closed by a
/// "data: [DONE]" sentinel (OpenAI Chat and, on input, Responses without
/// the sentinel requirement), event+data pairs (Anthropic, OpenAI
/// Responses), and data-only frames with no sentinel (Google).
enum class Dialect { openai, anthropic, google };

constexpr std::string_view dialect_name(Dialect d) {
  switch (d) {
    case Dialect::openai: return "openai";
    case Dialect::anthropic: return "anthropic";
    case Dialect::google: return "google";
  }
  return "unknown";
}

struct SseFrame {
  std::optional<std::string> event_name;
  std::string data; // raw, pre-JSON; multi-line fields joined with '\n'

  friend bool operator==(const SseFrame&, const SseFrame&) = default;
};

/// Incremental frame parser. Chunks may split frames at arbitrary byte
/// boundaries, including inside UTF-8 sequences; frames come out exactly
/// once, in order, with the trailing partial frame retained in state.
class Parser {
public:
  /// Throws errors::EncodingError if a completed frame's bytes are not
  /// valid UTF-8.
  std::vector<SseFrame> feed(std::string_view bytes);

  /// True when buffered bytes hold an unterminated partial frame.
  bool has_partial() const;

  std::int64_t comment_lines_seen() const { return comment_lines_; }
  std::int64_t retry_lines_seen() const { return retry_lines_; }

private:
  void finish_frame(std::vector<SseFrame>& out);
  void consume_line(std::string_view line, std::vector<SseFrame>& out);

  std::string buffer_;
  std::optional<std::string> event_name_;
  std::vector<std::string> data_lines_;
  bool saw_field_ = false;
  bool at_stream_start_ = true;
  std::int64_t comment_lines_ = 0;
  std::int64_t retry_lines_ = 0;
};

/// Serializes one frame in the given dialect, byte-exact:
///   openai / google:  "data: <data>\n\n"
///   anthropic:        "event: <name>\ndata: <data>\n\n"
/// Throws errors::MissingEventName for anthropic frames without a name.
std::string serialize(const SseFrame& frame, Dialect dialect);

/// Terminal bytes on normal stream close: "data: [DONE]\n\n" for the
/// openai dialect, nothing for the others.
std::string serialize_close(Dialect dialect);

/// The openai-dialect sentinel test, tolerant of surrounding whitespace.
bool is_done_sentinel(const SseFrame& frame);

} // namespace rosetta::sse
