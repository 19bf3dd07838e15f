#include "heisfock/errors.hpp"

namespace heisfock {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::ConjecturalDisabled: return "ConjecturalDisabled";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::MissingTable: return "MissingTable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_validation() const noexcept {
  switch (kind_) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotAPartition:
    case ErrorKind::SizeMismatch:
    case ErrorKind::BasisMismatch:
    case ErrorKind::RangeError:
      return true;
    default:
      return false;
  }
}

}  // namespace heisfock
