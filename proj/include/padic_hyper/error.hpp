#pragma once

#include <stdexcept>
#include <string>

namespace phyper {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,     // singular curve, excluded parameter, value outside Z_p
  kPrecision,  // all significance consumed, or requested precision unavailable
  kBudget,     // table or ring size over the configured cap
  kIo,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace phyper
