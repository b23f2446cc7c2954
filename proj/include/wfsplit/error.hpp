#pragma once

#include <stdexcept>
#include <string>

namespace wfsplit {

enum class ErrorCode {
  InvalidArgument,
  DegenerateTet,
  DegenerateTriangle,
  NotInPlane,
  Outside,
  NoCrossing,
  NonManifold,
  NonConforming,
  ParseError,
  IndexOutOfRange,
  UnsupportedVersion,
  IoError,
  SplitPointOutsideFace,
  InvalidC0,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code is what the C API and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wfsplit
