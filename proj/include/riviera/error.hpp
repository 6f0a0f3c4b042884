#pragma once

#include <stdexcept>
#include <string>

namespace riviera {

enum class ErrorKind {
  NotJammed,
  CapExceeded,
  InsufficientTable,
  SingularSystem,
  NegativeCoefficient,
  OutOfSupport,
  NoConvergence,
  UnsupportedSize,
  NoESExists,
  DimensionMismatch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace riviera
