#include "riviera/error.hpp"

namespace riviera {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotJammed: return "NotJammed";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InsufficientTable: return "InsufficientTable";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::OutOfSupport: return "OutOfSupport";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::NoESExists: return "NoESExists";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace riviera
