#pragma once

// The special Galilean group SGal(3).
//
// Group element, embedded in GL(5):
//
//   [ C v r   ]
//   [ 0 1 tau ]
//   [ 0 0 1   ]
//
// Tangent coordinates are always ordered (rho, nu, phi, iota):
//
//   index  0..2  rho   translation generator
//          3..5  nu    boost generator
//          6..8  phi   rotation generator
//          9     iota  time-translation generator
//
// and every 10x10 matrix in this library (adjoints, Jacobians, covariances)
// uses the same ordering.

#include <Eigen/Core>

#include "sgal/lie_core.hpp"

namespace sgal {

using Vec10 = Eigen::Matrix<double, 10, 1>;
using Mat10 = Eigen::Matrix<double, 10, 10>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec5 = Eigen::Matrix<double, 5, 1>;

using TangentVector = Vec10;
using AlgebraMatrix = Mat5;

namespace tangent {

inline constexpr int kRho = 0;
inline constexpr int kNu = 3;
inline constexpr int kPhi = 6;
inline constexpr int kIota = 9;
inline constexpr int kDim = 10;

TangentVector make(const Vec3& rho, const Vec3& nu, const Vec3& phi, double iota);

inline Vec3 rho(const TangentVector& xi) { return xi.segment<3>(kRho); }
inline Vec3 nu(const TangentVector& xi) { return xi.segment<3>(kNu); }
inline Vec3 phi(const TangentVector& xi) { return xi.segment<3>(kPhi); }
inline double iota(const TangentVector& xi) { return xi(kIota); }

}  // namespace tangent

/// A point in space and time.
struct Event {
  Vec3 x = Vec3::Zero();
  double t = 0.0;

  /// (x, t, 1)
  Vec5 homogeneous() const;
};

/// Element (C, v, r, tau) of SGal(3), stored componentwise.
///
/// The constructor does not re-orthonormalize C; composition accumulates
/// rounding in C until renormalized() is called.
class GalileanTransform {
 public:
  GalileanTransform() = default;
  GalileanTransform(const Mat3& rotation, const Vec3& velocity, const Vec3& position, double time);

  static GalileanTransform identity() { return {}; }

  const Mat3& rotation() const { return rotation_; }
  const Vec3& velocity() const { return velocity_; }
  const Vec3& position() const { return position_; }
  double time() const { return time_; }

  /// 5x5 embedding.
  Mat5 matrix() const;

  /// Same element with C projected back onto SO(3).
  GalileanTransform renormalized() const;

  bool is_valid(double tol = 1e-12) const;

 private:
  Mat3 rotation_ = Mat3::Identity();
  Vec3 velocity_ = Vec3::Zero();
  Vec3 position_ = Vec3::Zero();
  double time_ = 0.0;
};

AlgebraMatrix wedge(const TangentVector& xi);

/// Throws Error{MalformedAlgebraElement} if m departs from the sgal(3)
/// block pattern by more than 1e-9.
TangentVector vee(const AlgebraMatrix& m);

/// Closed form: C = exp_so3(phi), v = D nu, r = D rho + E nu iota, tau = iota.
GalileanTransform exp(const TangentVector& xi);

/// Inverse of exp on rotation angles below pi - kNearPiMargin; throws
/// Error{AngleNearPi} beyond that.
TangentVector log(const GalileanTransform& f);

GalileanTransform compose(const GalileanTransform& lhs, const GalileanTransform& rhs);
GalileanTransform inverse(const GalileanTransform& f);

inline GalileanTransform operator*(const GalileanTransform& lhs, const GalileanTransform& rhs) {
  return compose(lhs, rhs);
}

/// p' = F p: x' = C x + v t + r, t' = t + tau.
Event act(const GalileanTransform& f, const Event& p);

/// Ad_F with wedge(Ad_F xi) = F wedge(xi) F^-1.
Mat10 adjoint(const GalileanTransform& f);

/// ad_xi with wedge(ad_xi eta) = [wedge(xi), wedge(eta)].
Mat10 ad_small(const TangentVector& xi);

/// Left Jacobian sum_n ad_xi^n / (n+1)!, so that
///   exp(xi + d) ~= exp(J_l(xi) d) exp(xi).
/// Intended for |phi| < pi. Throws Error{ConvergenceFailure} if the series
/// terms do not drop below 1e-14 within 60 terms.
Mat10 left_jacobian_group(const TangentVector& xi);

/// J_r(xi) = J_l(-xi), so that exp(xi + d) ~= exp(xi) exp(J_r(xi) d).
Mat10 right_jacobian_group(const TangentVector& xi);

}  // namespace sgal
