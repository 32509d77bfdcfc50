#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rosetta/json.hpp"

namespace rosetta::ir {

struct LogprobsConfig {
  bool enabled = false;
  std::optional<std::int64_t> top_logprobs;

  friend bool operator==(const LogprobsConfig&, const LogprobsConfig&) = default;
};

struct GenerationConfig {
  std::optional<double> temperature;       // >= 0
  std::optional<double> top_p;             // in [0,1]
  std::optional<std::int64_t> top_k;       // > 0
  std::optional<std::int64_t> max_tokens;  // > 0
  std::optional<std::vector<std::string>> stop_sequences;
  std::optional<double> frequency_penalty;
  std::optional<double> presence_penalty;
  Json logit_bias; // token-id string -> bias; null when unset
  std::optional<std::int64_t> seed;
  std::optional<LogprobsConfig> logprobs;

  bool empty() const {
    return !temperature && !top_p && !top_k && !max_tokens && !stop_sequences &&
           !frequency_penalty && !presence_penalty && logit_bias.is_null() &&
           !seed && !logprobs;
  }

  friend bool operator==(const GenerationConfig&, const GenerationConfig&) = default;
};

enum class ReasoningEffort { low, medium, high };

constexpr std::string_view reasoning_effort_name(ReasoningEffort e) {
  switch (e) {
    case ReasoningEffort::low: return "low";
    case ReasoningEffort::medium: return "medium";
    case ReasoningEffort::high: return "high";
  }
  return "unknown";
}

struct ReasoningConfig {
  std::optional<bool> enabled;
  std::optional<ReasoningEffort> effort;
  std::optional<std::int64_t> budget_tokens; // > 0

  bool empty() const { return !enabled && !effort && !budget_tokens; }

  friend bool operator==(const ReasoningConfig&, const ReasoningConfig&) = default;
};

struct StreamConfig {
  bool enabled = false;
  std::optional<bool> include_usage;

  friend bool operator==(const StreamConfig&, const StreamConfig&) = default;
};

struct ResponseFormatConfig {
  enum class Kind { text, json_object, json_schema };
  Kind kind = Kind::text;
  Json schema; // required iff kind == json_schema
  std::optional<std::string> schema_name;

  friend bool operator==(const ResponseFormatConfig&, const ResponseFormatConfig&) = default;
};

constexpr std::string_view response_format_kind_name(ResponseFormatConfig::Kind k) {
  switch (k) {
    case ResponseFormatConfig::Kind::text: return "text";
    case ResponseFormatConfig::Kind::json_object: return "json_object";
    case ResponseFormatConfig::Kind::json_schema: return "json_schema";
  }
  return "unknown";
}

} // namespace rosetta::ir
