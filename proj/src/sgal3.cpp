#include "sgal/sgal3.hpp"

#include <cmath>

#include "sgal/errors.hpp"

namespace sgal {

using namespace tangent;

TangentVector tangent::make(const Vec3& rho, const Vec3& nu, const Vec3& phi, double iota) {
  TangentVector xi;
  xi << rho, nu, phi, iota;
  return xi;
}

Vec5 Event::homogeneous() const {
  Vec5 p;
  p << x, t, 1.0;
  return p;
}

GalileanTransform::GalileanTransform(const Mat3& rotation, const Vec3& velocity,
                                     const Vec3& position, double time)
    : rotation_(rotation), velocity_(velocity), position_(position), time_(time) {}

Mat5 GalileanTransform::matrix() const {
  Mat5 m = Mat5::Identity();
  m.topLeftCorner<3, 3>() = rotation_;
  m.block<3, 1>(0, 3) = velocity_;
  m.block<3, 1>(0, 4) = position_;
  m(3, 4) = time_;
  return m;
}

GalileanTransform GalileanTransform::renormalized() const {
  return {orthonormalize(rotation_), velocity_, position_, time_};
}

bool GalileanTransform::is_valid(double tol) const {
  return is_rotation(rotation_, tol) && velocity_.allFinite() && position_.allFinite() &&
         std::isfinite(time_);
}

AlgebraMatrix wedge(const TangentVector& xi) {
  AlgebraMatrix m = AlgebraMatrix::Zero();
  m.topLeftCorner<3, 3>() = hat3(phi(xi));
  m.block<3, 1>(0, 3) = nu(xi);
  m.block<3, 1>(0, 4) = rho(xi);
  m(3, 4) = iota(xi);
  return m;
}

TangentVector vee(const AlgebraMatrix& m) {
  constexpr double kTol = 1e-9;
  const Mat3 top_left = m.topLeftCorner<3, 3>();
  const bool skew = (top_left + top_left.transpose()).cwiseAbs().maxCoeff() <= kTol;
  const bool row4 = m.block<1, 4>(3, 0).cwiseAbs().maxCoeff() <= kTol;
  const bool row5 = m.row(4).cwiseAbs().maxCoeff() <= kTol;
  if (!skew || !row4 || !row5) {
    throw Error(ErrorKind::MalformedAlgebraElement, "matrix is not in sgal(3)");
  }
  return make(m.block<3, 1>(0, 4), m.block<3, 1>(0, 3), vee3(top_left), m(3, 4));
}

GalileanTransform exp(const TangentVector& xi) {
  const Vec3 w = phi(xi);
  const Mat3 d = left_jacobian_so3(w);
  const Vec3 boost = nu(xi);
  return {exp_so3(w), d * boost, d * rho(xi) + e_matrix(w) * boost * iota(xi), iota(xi)};
}

TangentVector log(const GalileanTransform& f) {
  const Vec3 w = log_so3(f.rotation());
  const Mat3 d_inv = inv_left_jacobian_so3(w);
  const double t = f.time();
  const Vec3 boost = d_inv * f.velocity();
  const Vec3 translation = d_inv * (f.position() - e_matrix(w) * boost * t);
  return make(translation, boost, w, t);
}

GalileanTransform compose(const GalileanTransform& lhs, const GalileanTransform& rhs) {
  const Mat3& c1 = lhs.rotation();
  return {c1 * rhs.rotation(), c1 * rhs.velocity() + lhs.velocity(),
          c1 * rhs.position() + lhs.velocity() * rhs.time() + lhs.position(),
          lhs.time() + rhs.time()};
}

GalileanTransform inverse(const GalileanTransform& f) {
  const Mat3 ct = f.rotation().transpose();
  return {ct, -ct * f.velocity(), -ct * (f.position() - f.velocity() * f.time()), -f.time()};
}

Event act(const GalileanTransform& f, const Event& p) {
  return {f.rotation() * p.x + f.velocity() * p.t + f.position(), p.t + f.time()};
}

Mat10 adjoint(const GalileanTransform& f) {
  const Mat3& c = f.rotation();
  const Vec3& v = f.velocity();
  const double tau = f.time();

  Mat10 a = Mat10::Zero();
  a.block<3, 3>(kRho, kRho) = c;
  a.block<3, 3>(kRho, kNu) = -tau * c;
  a.block<3, 3>(kRho, kPhi) = hat3(f.position() - v * tau) * c;
  a.block<3, 1>(kRho, kIota) = v;
  a.block<3, 3>(kNu, kNu) = c;
  a.block<3, 3>(kNu, kPhi) = hat3(v) * c;
  a.block<3, 3>(kPhi, kPhi) = c;
  a(kIota, kIota) = 1.0;
  return a;
}

Mat10 ad_small(const TangentVector& xi) {
  const Mat3 w = hat3(phi(xi));

  Mat10 a = Mat10::Zero();
  a.block<3, 3>(kRho, kRho) = w;
  a.block<3, 3>(kRho, kNu) = -iota(xi) * Mat3::Identity();
  a.block<3, 3>(kRho, kPhi) = hat3(rho(xi));
  a.block<3, 1>(kRho, kIota) = nu(xi);
  a.block<3, 3>(kNu, kNu) = w;
  a.block<3, 3>(kNu, kPhi) = hat3(nu(xi));
  a.block<3, 3>(kPhi, kPhi) = w;
  return a;
}

Mat10 left_jacobian_group(const TangentVector& xi) {
  constexpr int kMaxTerms = 60;
  constexpr double kTermTol = 1e-14;

  const Mat10 ad = ad_small(xi);
  Mat10 sum = Mat10::Identity();
  Mat10 term = Mat10::Identity();
  for (int n = 1; n < kMaxTerms; ++n) {
    term = (term * ad) / static_cast<double>(n + 1);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < kTermTol) return sum;
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "group Jacobian series did not converge within 60 terms");
}

Mat10 right_jacobian_group(const TangentVector& xi) { return left_jacobian_group(-xi); }

}  // namespace sgal
