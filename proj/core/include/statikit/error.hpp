#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace statikit {

enum class ErrorCode {
  kNotPointed,
  kRayOutsideSupport,
  kSupportMismatch,
  kZeroVector,
  kUnsupportedSupport,
  kNonSmoothChart,
  kInvalidInput,
};

std::string_view error_code_name(ErrorCode code);

/// Raised by every library operation that rejects its input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace statikit
