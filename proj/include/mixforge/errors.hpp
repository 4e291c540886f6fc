#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixforge {

/// Error codes mirror the failure modes of the public operations. The CLI
/// maps them onto exit codes, the python bindings onto exception types.
enum class ErrorCode {
  InvalidCharacter,
  ResourceBound,
  OddLength,
  ZeroVector,
  NotClosed,
  AntiparallelTangents,
  NotEmbedded,
  UnsupportedDimension,
  DimensionMismatch,
  NotACycle,
  OutOfDomain,
  ArityMismatch,
  AmbiguousCyclicOrder,
  NotInOn,
  Incompleteness,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::ptrdiff_t index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const { return code_; }

  /// Position payload for InvalidCharacter / ZeroVector, -1 otherwise.
  std::ptrdiff_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::ptrdiff_t index_;
};

}  // namespace mixforge
