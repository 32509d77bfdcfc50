#pragma once

// Internal helpers shared by the serde, provider, and detect translation
// units. Not installed.

#include <cstdint>
#include <string>
#include <string_view>

#include "rosetta/convert/errors.hpp"
#include "rosetta/json.hpp"

namespace rosetta::jsonutil {

inline std::string key_path(const std::string& base, std::string_view key) {
  std::string out = base;
  out += '.';
  out += key;
  return out;
}

inline std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

[[noreturn]] inline void fail(const std::string& what, const std::string& path) {
  throw errors::MalformedInput(what, path);
}

inline const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail("expected object, got " + std::string(j.type_name()), path);
  return j;
}

inline const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail("expected array, got " + std::string(j.type_name()), path);
  return j;
}

inline std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail("expected string, got " + std::string(j.type_name()), path);
  return j.get<std::string>();
}

inline std::int64_t require_int(const Json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) return j.get<std::int64_t>();
  // Accept integral doubles (1.0); wire payloads are not strict here.
  if (j.is_number_float()) {
    double d = j.get<double>();
    auto i = static_cast<std::int64_t>(d);
    if (static_cast<double>(i) == d) return i;
  }
  fail("expected integer, got " + std::string(j.type_name()), path);
}

inline double require_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail("expected number, got " + std::string(j.type_name()), path);
  return j.get<double>();
}

inline bool require_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail("expected boolean, got " + std::string(j.type_name()), path);
  return j.get<bool>();
}

/// Valid UTF-8 check (RFC 3629: no surrogates, no overlongs, max U+10FFFF).
bool is_valid_utf8(std::string_view bytes);

} // namespace rosetta::jsonutil
