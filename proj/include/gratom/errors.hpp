#ifndef GRATOM_ERRORS_HPP_
#define GRATOM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gratom {

enum class ErrorCode {
  invalid_argument = 1,
  horizon = 2,
  regime = 3,
  unsupported = 4,
  no_root = 5,
  nonconvergence = 6,
  parse_error = 7,
  io_error = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gratom

#endif  // GRATOM_ERRORS_HPP_
