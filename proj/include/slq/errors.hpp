#pragma once

#include <stdexcept>
#include <string>

namespace slq {

// Stable numeric values: these are mirrored by the SLQ_ERR_* constants of the
// C API (see slq/slq.h) and must not be reordered.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  malformed_input = 2,
  unsupported_format = 3,
  not_spd = 4,
  degenerate_spectrum = 5,
  invalid_regime = 6,
  no_interior_minimizer = 7,
  numerical_failure = 8,
  oracle_too_large = 9,
  undefined_target = 10,
  domain_error = 11,
  io_error = 12,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace slq
