#pragma once

#include <stdexcept>
#include <string>

namespace qe {

enum class ErrorCode {
  InvalidArgument,
  InvalidParams,
  DegenerateFrequencies,
  UnstableMode,
  NotPositiveDefinite,
  UnsupportedDegree,
  IndexOutOfRange,
  DimensionMismatch,
  NotAProductDimension,
  NotPositiveSemidefinite,
  NonPositiveTemperature,
  NonPositiveQ,
  Config,
  Io,
};

const char* to_string(ErrorCode code);

// Every failure in the library surfaces as this exception; the code lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qe
