#include "sgal/errors.hpp"

namespace sgal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::AngleNearPi: return "AngleNearPi";
    case ErrorKind::JacobianSingular: return "JacobianSingular";
    case ErrorKind::MalformedAlgebraElement: return "MalformedAlgebraElement";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::DegenerateCovariance: return "DegenerateCovariance";
    case ErrorKind::NonPositiveDt: return "NonPositiveDt";
    case ErrorKind::EmptyStream: return "EmptyStream";
    case ErrorKind::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace sgal
