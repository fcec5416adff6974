#pragma once

// SO(3) building blocks for the SGal(3) maps.
//
// With A = hat3(phi) and theta = |phi|, the three series used throughout are
//
//   C(phi) = sum_n A^n / n!        (rotation)
//   D(phi) = sum_n A^n / (n+1)!    (left Jacobian of SO(3))
//   E(phi) = sum_n A^n / (n+2)!
//
// Each collapses to alpha*I + beta*A + gamma*A^2 because A^3 = -theta^2 A.

#include <Eigen/Core>

namespace sgal {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Below this angle exp_so3, left_jacobian_so3 and inv_left_jacobian_so3 use
/// Taylor polynomials.
inline constexpr double kSmallAngle = 1e-4;
/// Switch angle for e_matrix.
inline constexpr double kSmallAngleE = 1e-3;
/// log_so3 rejects rotation angles within this distance of pi.
inline constexpr double kNearPiMargin = 1e-6;

Mat3 hat3(const Vec3& phi);

/// Throws Error{NotSkewSymmetric} if |m + m^T| exceeds 1e-9 in any entry.
Vec3 vee3(const Mat3& m);

Mat3 exp_so3(const Vec3& phi);

/// Principal logarithm. Throws Error{AngleNearPi} when the angle is within
/// kNearPiMargin of pi, where the axis sign becomes ambiguous.
Vec3 log_so3(const Mat3& rotation);

/// The D matrix.
Mat3 left_jacobian_so3(const Vec3& phi);

/// Throws Error{JacobianSingular} for |phi| >= 2*pi - 1e-6.
Mat3 inv_left_jacobian_so3(const Vec3& phi);

/// The E matrix; E(0) = I/2.
Mat3 e_matrix(const Vec3& phi);

/// R^T R = I and det R = 1, both within tol (Frobenius / absolute).
bool is_rotation(const Mat3& m, double tol = 1e-12);

/// Nearest rotation in the Frobenius sense (SVD projection).
Mat3 orthonormalize(const Mat3& m);

namespace detail {

/// Coefficients (alpha, beta, gamma) of alpha*I + beta*A + gamma*A^2.
struct SeriesCoefficients {
  double identity;
  double linear;
  double quadratic;
};

// Both branches are exposed so tests can compare them across the switch.
SeriesCoefficients exp_coefficients_closed(double theta);
SeriesCoefficients exp_coefficients_taylor(double theta);
SeriesCoefficients d_coefficients_closed(double theta);
SeriesCoefficients d_coefficients_taylor(double theta);
SeriesCoefficients e_coefficients_closed(double theta);
SeriesCoefficients e_coefficients_taylor(double theta);
SeriesCoefficients d_inverse_coefficients_closed(double theta);
SeriesCoefficients d_inverse_coefficients_taylor(double theta);

Mat3 assemble(const SeriesCoefficients& k, const Vec3& phi);

}  // namespace detail

}  // namespace sgal
