#include "rosetta/ir/event_grammar.hpp"

#include <map>
#include <sstream>

namespace rosetta::ir {

std::string GrammarReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) os << "event " << v.event_ordinal << ": " << v.message << "\n";
  return os.str();
}

GrammarReport check_event_grammar(std::span<const StreamEvent> events) {
  GrammarReport report;
  auto violate = [&](std::size_t i, std::string msg) {
    report.violations.push_back({i, std::move(msg)});
  };

  if (events.empty()) {
    violate(0, "empty stream: stream_start and stream_end required");
    return report;
  }

  std::map<std::int64_t, BlockKind> open;
  std::map<std::int64_t, bool> seen; // block index -> ever started
  std::int64_t last_started = -1;
  bool started = false;
  bool ended = false;
  int finish_count = 0;
  int usage_count = 0;
  std::int64_t expect_tool_start = -1; // block awaiting its tool_call_start

  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& event = events[i];
    auto kind = stream_event_kind(event);

    if (i == 0 && kind != StreamEventKind::stream_start) {
      violate(i, "stream must begin with stream_start");
    }
    if (ended) {
      violate(i, "event after stream_end");
      continue;
    }
    if (expect_tool_start >= 0 && kind != StreamEventKind::tool_call_start) {
      violate(i, "tool_call block " + std::to_string(expect_tool_start) +
                     " opened without an immediate tool_call_start");
      expect_tool_start = -1;
    }

    switch (kind) {
      case StreamEventKind::stream_start:
        if (started) violate(i, "duplicate stream_start");
        started = true;
        break;
      case StreamEventKind::stream_end:
        if (!open.empty()) {
          violate(i, "stream_end with " + std::to_string(open.size()) + " block(s) still open");
        }
        ended = true;
        break;
      case StreamEventKind::content_block_start: {
        const auto& e = std::get<ContentBlockStart>(event);
        if (e.block_index < last_started) {
          violate(i, "block indices must be monotonically non-decreasing");
        }
        if (seen.count(e.block_index)) {
          violate(i, "block " + std::to_string(e.block_index) + " started twice");
        }
        last_started = std::max(last_started, e.block_index);
        seen[e.block_index] = true;
        open[e.block_index] = e.block_kind;
        if (e.block_kind == BlockKind::tool_call) expect_tool_start = e.block_index;
        break;
      }
      case StreamEventKind::content_block_end: {
        const auto& e = std::get<ContentBlockEnd>(event);
        auto it = open.find(e.block_index);
        if (it == open.end()) {
          violate(i, "close of block " + std::to_string(e.block_index) +
                         (seen.count(e.block_index) ? " which is already closed" : " which was never opened"));
        } else {
          open.erase(it);
        }
        break;
      }
      case StreamEventKind::text_delta: {
        const auto& e = std::get<TextDelta>(event);
        auto it = open.find(e.block_index);
        if (it == open.end()) {
          violate(i, "text_delta outside an open block");
        } else if (it->second != BlockKind::text) {
          violate(i, "text_delta in a non-text block");
        }
        break;
      }
      case StreamEventKind::reasoning_delta: {
        const auto& e = std::get<ReasoningDelta>(event);
        auto it = open.find(e.block_index);
        if (it == open.end()) {
          violate(i, "reasoning_delta outside an open block");
        } else if (it->second != BlockKind::reasoning) {
          violate(i, "reasoning_delta in a non-reasoning block");
        }
        break;
      }
      case StreamEventKind::tool_call_start: {
        const auto& e = std::get<ToolCallStart>(event);
        auto it = open.find(e.block_index);
        if (it == open.end() || it->second != BlockKind::tool_call) {
          violate(i, "tool_call_start outside an open tool_call block");
        } else if (expect_tool_start != e.block_index) {
          violate(i, "tool_call_start not immediately after its block start");
        }
        expect_tool_start = -1;
        break;
      }
      case StreamEventKind::tool_call_delta: {
        const auto& e = std::get<ToolCallDelta>(event);
        auto it = open.find(e.block_index);
        if (it == open.end()) {
          violate(i, "tool_call_delta outside an open block");
        } else if (it->second != BlockKind::tool_call) {
          violate(i, "tool_call_delta in a non-tool block");
        }
        break;
      }
      case StreamEventKind::finish:
        if (++finish_count > 1) violate(i, "duplicate finish event");
        if (!open.empty()) violate(i, "finish while a block is open");
        break;
      case StreamEventKind::usage:
        if (++usage_count > 1) violate(i, "duplicate usage event");
        if (!open.empty()) violate(i, "usage while a block is open");
        break;
    }
  }

  if (!ended) violate(events.size() - 1, "stream must end with stream_end");
  return report;
}

} // namespace rosetta::ir
