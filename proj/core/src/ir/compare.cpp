#include "rosetta/ir/compare.hpp"

#include <cmath>

#include "rosetta/ir/serde.hpp"

namespace rosetta::ir {

namespace {

// Exact integer-vs-double equality: true iff the double holds exactly the
// integer's mathematical value. Never rounds the integer into a double.
template <typename Int>
bool int_equals_double(Int i, double d) {
  if (!std::isfinite(d) || std::floor(d) != d) return false;
  constexpr double kTwo63 = 9223372036854775808.0; // 2^63
  if constexpr (std::is_signed_v<Int>) {
    if (d < -kTwo63 || d >= kTwo63) return false;
  } else {
    if (d < 0 || d >= 2.0 * kTwo63) return false;
  }
  // d is integral and in range, so this conversion is exact.
  return static_cast<Int>(d) == i;
}

// Numbers compare by mathematical value: exact semantics between
// integers, IEEE-754 double semantics when both are floats. No epsilon;
// wire payloads are already quantized by serialization.
bool numbers_equal(const Json& a, const Json& b) {
  bool a_float = a.is_number_float();
  bool b_float = b.is_number_float();
  if (!a_float && !b_float) {
    // Mixed signed/unsigned: compare without wrapping.
    if (a.is_number_unsigned() && b.is_number_unsigned()) {
      return a.get<std::uint64_t>() == b.get<std::uint64_t>();
    }
    if (a.is_number_unsigned() != b.is_number_unsigned()) {
      std::int64_t s = a.is_number_unsigned() ? b.get<std::int64_t>() : a.get<std::int64_t>();
      std::uint64_t u = a.is_number_unsigned() ? a.get<std::uint64_t>() : b.get<std::uint64_t>();
      return s >= 0 && static_cast<std::uint64_t>(s) == u;
    }
    return a.get<std::int64_t>() == b.get<std::int64_t>();
  }
  if (a_float != b_float) {
    const Json& i = a_float ? b : a;
    double d = (a_float ? a : b).get<double>();
    if (i.is_number_unsigned()) return int_equals_double(i.get<std::uint64_t>(), d);
    return int_equals_double(i.get<std::int64_t>(), d);
  }
  double da = a.get<double>();
  double db = b.get<double>();
  if (std::isnan(da) || std::isnan(db)) return false;
  return da == db;
}

} // namespace

bool structural_equal(const Json& a, const Json& b) {
  if (a.is_number() && b.is_number()) return numbers_equal(a, b);
  if (a.type() != b.type()) {
    // ordered_json distinguishes object flavors only by storage; any other
    // type mismatch (given numbers were handled) means unequal.
    if (a.is_object() && b.is_object()) {
      // fallthrough to object comparison below
    } else {
      return false;
    }
  }
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (const auto& [key, value] : a.items()) {
      auto it = b.find(key);
      if (it == b.end()) return false;
      if (!structural_equal(value, *it)) return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!structural_equal(a[i], b[i])) return false;
    }
    return true;
  }
  return a == b; // null, bool, string
}

namespace {

Json profile_parts(const std::vector<ContentPart>& parts) {
  // Concatenate text runs; keep tool calls and media identity; ignore
  // provider metadata and shape variance.
  Json out = Json::object();
  std::string text;
  std::string reasoning;
  Json tool_calls = Json::array();
  Json tool_results = Json::array();
  Json media = Json::array();
  Json refusals = Json::array();
  for (const auto& part : parts) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, TextPart>) {
            text += p.text;
          } else if constexpr (std::is_same_v<T, ReasoningPart>) {
            reasoning += p.text;
          } else if constexpr (std::is_same_v<T, ToolCallPart>) {
            tool_calls.push_back(Json{{"name", p.tool_name}, {"input", p.tool_input}});
          } else if constexpr (std::is_same_v<T, ToolResultPart>) {
            std::string result_text;
            for (const auto& inner : p.content) {
              if (const auto* t = std::get_if<TextPart>(&inner)) result_text += t->text;
            }
            tool_results.push_back(
                Json{{"text", result_text}, {"is_error", p.is_error.value_or(false)}});
          } else if constexpr (std::is_same_v<T, ImagePart>) {
            media.push_back(Json{{"kind", "image"},
                                 {"media_type", p.media_type},
                                 {"data", p.source.value}});
          } else if constexpr (std::is_same_v<T, AudioPart>) {
            media.push_back(Json{{"kind", "audio"}, {"media_type", p.media_type}, {"data", p.data}});
          } else if constexpr (std::is_same_v<T, FilePart>) {
            media.push_back(Json{{"kind", "file"},
                                 {"media_type", p.media_type},
                                 {"data", p.source.value}});
          } else if constexpr (std::is_same_v<T, RefusalPart>) {
            refusals.push_back(p.reason);
          } else if constexpr (std::is_same_v<T, CitationPart>) {
            // Citations are annotations; absence in a target format is a
            // warned drop, not a semantic break.
          }
        },
        part);
  }
  if (!text.empty()) out["text"] = text;
  if (!reasoning.empty()) out["reasoning"] = reasoning;
  if (!tool_calls.empty()) out["tool_calls"] = tool_calls;
  if (!tool_results.empty()) out["tool_results"] = tool_results;
  if (!media.empty()) out["media"] = media;
  if (!refusals.empty()) out["refusals"] = refusals;
  return out;
}

Json profile_message(const Message& m) {
  Json j = profile_parts(message_content(m));
  j["role"] = std::string(role_name(message_role(m)));
  return j;
}

} // namespace

Json semantic_profile(const IRRequest& request) {
  Json j = Json::object();
  j["model"] = request.model;
  if (request.system) {
    std::string text;
    for (const auto& part : request.system->content) {
      if (const auto* t = std::get_if<TextPart>(&part)) text += t->text;
    }
    j["system"] = text;
  }
  Json msgs = Json::array();
  for (const auto& m : request.messages) msgs.push_back(profile_message(m));
  j["messages"] = std::move(msgs);
  if (request.tools) {
    Json tools = Json::array();
    for (const auto& t : *request.tools) {
      Json tj = Json::object();
      tj["name"] = t.name;
      if (t.description) tj["description"] = *t.description;
      if (!t.parameters.is_null()) tj["parameters"] = t.parameters;
      tools.push_back(std::move(tj));
    }
    j["tools"] = std::move(tools);
  }
  if (request.tool_choice) {
    j["tool_choice"] = std::string(tool_choice_mode_name(request.tool_choice->mode));
    if (request.tool_choice->tool_name) j["tool_choice_name"] = *request.tool_choice->tool_name;
  }
  if (request.tool_call_config && request.tool_call_config->parallel_tool_calls) {
    j["parallel_tool_calls"] = *request.tool_call_config->parallel_tool_calls;
  }
  if (request.generation && !request.generation->empty()) {
    j["generation"] = to_json(*request.generation);
  }
  if (request.reasoning && !request.reasoning->empty()) {
    Json r = Json::object();
    if (request.reasoning->enabled) r["enabled"] = *request.reasoning->enabled;
    if (request.reasoning->effort) {
      r["effort"] = std::string(reasoning_effort_name(*request.reasoning->effort));
    }
    if (request.reasoning->budget_tokens) r["budget_tokens"] = *request.reasoning->budget_tokens;
    j["reasoning"] = std::move(r);
  }
  if (request.response_format) {
    j["response_format"] = std::string(response_format_kind_name(request.response_format->kind));
  }
  if (request.stream && request.stream->enabled) j["stream"] = true;
  return j;
}

Json semantic_profile(const IRResponse& response) {
  Json j = Json::object();
  Json choices = Json::array();
  for (const auto& c : response.choices) {
    Json cj = profile_parts(c.message.content);
    cj["finish_reason"] = std::string(finish_reason_name(c.finish_reason));
    choices.push_back(std::move(cj));
  }
  j["choices"] = std::move(choices);
  if (response.usage) {
    j["usage"] = Json{{"prompt_tokens", response.usage->prompt_tokens},
                      {"completion_tokens", response.usage->completion_tokens}};
  }
  return j;
}

} // namespace rosetta::ir
