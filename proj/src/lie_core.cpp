#include "sgal/lie_core.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "sgal/errors.hpp"

namespace sgal {

namespace detail {

// theta - sin(theta) and friends lose all precision near zero when computed
// naively; the half-angle products below keep relative error near 1e-8 even
// at theta = 5e-5.

SeriesCoefficients exp_coefficients_closed(double theta) {
  const double half_sin = std::sin(0.5 * theta);
  return {1.0, std::sin(theta) / theta, 2.0 * half_sin * half_sin / (theta * theta)};
}

SeriesCoefficients exp_coefficients_taylor(double theta) {
  const double t2 = theta * theta;
  return {1.0, 1.0 - t2 / 6.0 + t2 * t2 / 120.0, 0.5 - t2 / 24.0 + t2 * t2 / 720.0};
}

SeriesCoefficients d_coefficients_closed(double theta) {
  const double half_sin = std::sin(0.5 * theta);
  const double t2 = theta * theta;
  return {1.0, 2.0 * half_sin * half_sin / t2, (theta - std::sin(theta)) / (t2 * theta)};
}

SeriesCoefficients d_coefficients_taylor(double theta) {
  const double t2 = theta * theta;
  return {1.0, 0.5 - t2 / 24.0 + t2 * t2 / 720.0, 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0};
}

SeriesCoefficients e_coefficients_closed(double theta) {
  const double h = 0.5 * theta;
  const double t2 = theta * theta;
  // cos(theta) - 1 + theta^2/2 = 2 (h - sin h)(h + sin h)
  const double quad = 2.0 * (h - std::sin(h)) * (h + std::sin(h)) / (t2 * t2);
  return {0.5, (theta - std::sin(theta)) / (t2 * theta), quad};
}

SeriesCoefficients e_coefficients_taylor(double theta) {
  const double t2 = theta * theta;
  return {0.5, 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0,
          1.0 / 24.0 - t2 / 720.0 + t2 * t2 / 40320.0};
}

SeriesCoefficients d_inverse_coefficients_closed(double theta) {
  // 1/theta^2 - (1 + cos theta) / (2 theta sin theta), with the ratio
  // written as cot(theta/2) so theta = pi is regular.
  const double half = 0.5 * theta;
  return {1.0, -0.5, 1.0 / (theta * theta) - std::cos(half) / (std::sin(half) * 2.0 * theta)};
}

SeriesCoefficients d_inverse_coefficients_taylor(double theta) {
  const double t2 = theta * theta;
  return {1.0, -0.5, 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0};
}

Mat3 assemble(const SeriesCoefficients& k, const Vec3& phi) {
  const Mat3 a = hat3(phi);
  return k.identity * Mat3::Identity() + k.linear * a + k.quadratic * (a * a);
}

}  // namespace detail

Mat3 hat3(const Vec3& phi) {
  Mat3 m;
  // clang-format off
  m <<       0.0, -phi.z(),  phi.y(),
         phi.z(),      0.0, -phi.x(),
        -phi.y(),  phi.x(),      0.0;
  // clang-format on
  return m;
}

Vec3 vee3(const Mat3& m) {
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw Error(ErrorKind::NotSkewSymmetric, "vee3 input is not skew-symmetric");
  }
  return Vec3(0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1)));
}

Mat3 exp_so3(const Vec3& phi) {
  const double theta = phi.norm();
  return detail::assemble(theta < kSmallAngle ? detail::exp_coefficients_taylor(theta)
                                              : detail::exp_coefficients_closed(theta),
                          phi);
}

Vec3 log_so3(const Mat3& rotation) {
  const Vec3 axis_sin(0.5 * (rotation(2, 1) - rotation(1, 2)),
                      0.5 * (rotation(0, 2) - rotation(2, 0)),
                      0.5 * (rotation(1, 0) - rotation(0, 1)));
  const double s = axis_sin.norm();
  const double c = 0.5 * (rotation.trace() - 1.0);
  const double theta = std::atan2(s, c);
  if (theta > std::numbers::pi - kNearPiMargin) {
    throw Error(ErrorKind::AngleNearPi,
                "rotation angle " + std::to_string(theta) + " is too close to pi");
  }
  if (theta < kSmallAngle) {
    const double t2 = theta * theta;
    return (1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0) * axis_sin;
  }
  return (theta / s) * axis_sin;
}

Mat3 left_jacobian_so3(const Vec3& phi) {
  const double theta = phi.norm();
  return detail::assemble(theta < kSmallAngle ? detail::d_coefficients_taylor(theta)
                                              : detail::d_coefficients_closed(theta),
                          phi);
}

Mat3 inv_left_jacobian_so3(const Vec3& phi) {
  const double theta = phi.norm();
  if (theta >= 2.0 * std::numbers::pi - 1e-6) {
    throw Error(ErrorKind::JacobianSingular,
                "left Jacobian is singular at |phi| = " + std::to_string(theta));
  }
  return detail::assemble(theta < kSmallAngle ? detail::d_inverse_coefficients_taylor(theta)
                                              : detail::d_inverse_coefficients_closed(theta),
                          phi);
}

Mat3 e_matrix(const Vec3& phi) {
  const double theta = phi.norm();
  return detail::assemble(theta < kSmallAngleE ? detail::e_coefficients_taylor(theta)
                                               : detail::e_coefficients_closed(theta),
                          phi);
}

bool is_rotation(const Mat3& m, double tol) {
  if (!m.allFinite()) return false;
  return (m.transpose() * m - Mat3::Identity()).norm() <= tol &&
         std::abs(m.determinant() - 1.0) <= tol;
}

Mat3 orthonormalize(const Mat3& m) {
  const Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 fix = Mat3::Identity();
  fix(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  return svd.matrixU() * fix * svd.matrixV().transpose();
}

}  // namespace sgal
