#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rosetta/ir/format.hpp"
#include "rosetta/json.hpp"

namespace rosetta {

struct DetectionResult {
  std::optional<ir::ProviderFormat> format; // nullopt == unknown
  enum class Confidence { exact, heuristic };
  Confidence confidence = Confidence::heuristic;
  std::vector<std::string> signals; // matched signal names, in match order
};

/// Infers the provider format of a request body from structural signals,
/// in fixed priority order:
///   1. google:            "contents" whose elements carry "parts"
///   2. openai_responses:  "input"/"output" with typed items (also a bare
///                         string "input", documented extension)
///   3. bodies with "messages": anthropic on a top-level "system",
///      "anthropic_version", or Anthropic-vocabulary content blocks;
///      otherwise openai_chat
/// Earlier rules win outright; later rules are not consulted. Non-object
/// and signal-less bodies yield unknown. Pure function; never throws.
DetectionResult detect_format(const Json& body);

} // namespace rosetta
