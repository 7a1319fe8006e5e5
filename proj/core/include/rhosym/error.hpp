#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhosym {

enum class ErrorCode {
  invalid_argument,
  shape_mismatch,
  not_hermitian,
  no_convergence,
  zero_operator,
  zero_vector,
  zero_base_point,
  unsupported_dimension,
  construction_failed,
  shift_failed,
  bad_sequence,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Numerical failures (as opposed to bad input) map to CLI exit code 2.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::no_convergence || code_ == ErrorCode::construction_failed ||
           code_ == ErrorCode::shift_failed;
  }

 private:
  ErrorCode code_;
};

}  // namespace rhosym
