#pragma once

#include <stdexcept>
#include <string>

namespace kmin {

enum class ErrorCode {
  InvalidArgument,
  InvalidParams,
  Parse,
  TooSmall,
  TooLarge,
  Empty,
  NotConnected,
  NoSuchEdge,
  PreconditionViolated,
  NoSeparatorThroughX,
  WitnessNotFound,
  NoMinimalRegion,
  ClassMismatch,
  NotConverged,
  ValidationFailed,
  Internal,
};

const char* to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. The C API maps
/// the code one-to-one onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kmin
