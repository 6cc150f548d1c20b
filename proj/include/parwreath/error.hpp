#ifndef PARWREATH_ERROR_HPP_
#define PARWREATH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace parwreath {

enum class ErrorCode {
  invalid_argument,
  not_invertible,
  not_partition_preserving,
  unsupported_case,
  budget_exceeded,
  parse_error,
  io_error,
};

// Single exception type; the code tells callers (and the C API) which
// failure class they are looking at.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace parwreath

#endif  // PARWREATH_ERROR_HPP_
