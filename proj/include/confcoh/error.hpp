#pragma once

#include <stdexcept>
#include <string>

namespace confcoh {

enum class ErrorKind {
  InvalidArgument,
  NonTwoPrimary,
  DegreeCapExceeded,
  IllDefinedDerivation,
  NotApplicable,
  UnsupportedDegree,
  DegreeOutOfRange,
  RangeError,
  InconsistentRecursion,
  InconsistentOrders,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace confcoh
