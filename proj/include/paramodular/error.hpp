#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace paramodular {

enum class ErrorCode {
  InvalidRep,
  TwistIndeterminate,
  UndecidableCase,
  NotRegular,
  MissingAnnotation,
  InvalidDescriptor,
  Usage,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRep: return "invalid_rep";
    case ErrorCode::TwistIndeterminate: return "twist_indeterminate";
    case ErrorCode::UndecidableCase: return "undecidable_case";
    case ErrorCode::NotRegular: return "not_regular";
    case ErrorCode::MissingAnnotation: return "missing_annotation";
    case ErrorCode::InvalidDescriptor: return "invalid_descriptor";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

/// Indeterminate outcomes are correct answers that the symbolic model cannot
/// sharpen; everything else is a rejected input.
inline constexpr bool is_indeterminate(ErrorCode code) {
  return code == ErrorCode::TwistIndeterminate || code == ErrorCode::UndecidableCase ||
         code == ErrorCode::MissingAnnotation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string path = {})
      : std::runtime_error(std::move(message)), code_(code), path_(std::move(path)) {}

  ErrorCode code() const noexcept { return code_; }
  /// Location of the offending field in a descriptor, e.g. "tau1.chars[0].nu_exp".
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace paramodular
