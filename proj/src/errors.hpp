// SPDX-License-Identifier: Apache-2.0
#ifndef EXTDISC_ERRORS_HPP
#define EXTDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extdisc {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DomainViolation,   // point outside the body, node outside the disc, ...
  Convergence,
  Parse,
  Unsupported,
  Internal
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace extdisc

#endif
