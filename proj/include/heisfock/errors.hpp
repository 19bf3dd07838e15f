#pragma once

#include <stdexcept>
#include <string>

namespace heisfock {

enum class ErrorKind {
  InvalidInput,
  NotAPartition,
  SizeMismatch,
  BasisMismatch,
  RangeError,
  InvalidParam,
  ConjecturalDisabled,
  OnWall,
  MissingTable,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` distinguishes malformed input
/// (the caller passed something that is not a valid object) from domain errors
/// (a valid object outside the region where an operation is defined).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  bool is_validation() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace heisfock
