#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgal {

enum class ErrorKind {
  NotSkewSymmetric,
  AngleNearPi,
  JacobianSingular,
  MalformedAlgebraElement,
  ConvergenceFailure,
  NotPositiveSemidefinite,
  InsufficientSamples,
  DegenerateCovariance,
  NonPositiveDt,
  EmptyStream,
  NonMonotoneTime,
  InvalidArgument,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sgal
