#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace rosetta::errors {

/// Base of all conversion failures. Warnings never raise; errors always
/// abort the conversion.
class ConversionError : public std::runtime_error {
public:
  ConversionError(std::string what, std::optional<std::string> json_path = std::nullopt)
      : std::runtime_error(json_path ? what + " (at " + *json_path + ")" : what),
        json_path_(std::move(json_path)) {}

  const std::optional<std::string>& json_path() const { return json_path_; }

private:
  std::optional<std::string> json_path_;
};

/// Unparseable input or a missing/mistyped required provider field.
class MalformedInput : public ConversionError {
  using ConversionError::ConversionError;
};

/// Input uses a feature the IR cannot represent. Reserved; not expected to
/// fire for the four supported formats.
class UnsupportedConstruct : public ConversionError {
  using ConversionError::ConversionError;
};

/// Stream lifecycle misuse: delta for an unopened block, double close,
/// non-monotonic accumulated content, frames after the terminal sentinel.
class ProtocolViolation : public ConversionError {
  using ConversionError::ConversionError;
};

/// Requested format is not registered.
class UnknownFormat : public ConversionError {
  using ConversionError::ConversionError;
};

/// Byte stream decoded to invalid UTF-8 after frame reassembly.
class EncodingError : public ConversionError {
  using ConversionError::ConversionError;
};

/// Anthropic-dialect frame serialized without an event name.
class MissingEventName : public ConversionError {
  using ConversionError::ConversionError;
};

} // namespace rosetta::errors
