#pragma once

#include <stdexcept>
#include <string>

namespace cnt {

enum class ErrorCode {
  ZeroChirality,
  NonzeroSum,
  OrderingViolation,
  InvalidSite,
  InvalidArgument,
  OutOfRange,
  SingularPoint,
  InvariantViolation,
  NonConvergence,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cnt
