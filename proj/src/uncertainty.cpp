#include "sgal/uncertainty.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/erf.hpp>

#include "sgal/errors.hpp"

namespace sgal {

namespace {

constexpr double kPsdTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

GroupGaussian::GroupGaussian(const GalileanTransform& mean, const Mat10& covariance, Side side)
    : mean_(mean), covariance_(covariance), side_(side) {
  if (!covariance.allFinite()) {
    throw Error(ErrorKind::NotPositiveSemidefinite, "covariance has non-finite entries");
  }
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > kPsdTol) {
    throw Error(ErrorKind::NotPositiveSemidefinite, "covariance is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Mat10> eig(covariance, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorKind::NotPositiveSemidefinite,
                "covariance has eigenvalue " + std::to_string(eig.eigenvalues().minCoeff()));
  }
}

std::uint64_t rng::counter_bits(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed ^ splitmix64(counter));
}

double rng::counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  return (static_cast<double>(counter_bits(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double rng::counter_normal(std::uint64_t seed, std::uint64_t counter) {
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * counter_uniform(seed, counter));
}

Mat10 covariance_factor(const Mat10& covariance) {
  const Eigen::SelfAdjointEigenSolver<Mat10> eig(covariance);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorKind::NotPositiveSemidefinite, "covariance factorization failed");
  }
  const Vec10 roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * roots.asDiagonal();
}

std::vector<TangentVector> sample_tangent(const Mat10& covariance, std::size_t n,
                                          std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be at least 1");
  const Mat10 factor = covariance_factor(covariance);
  std::vector<TangentVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec10 z;
    for (int j = 0; j < tangent::kDim; ++j) {
      z(j) = rng::counter_normal(seed, static_cast<std::uint64_t>(i) * tangent::kDim + j);
    }
    out.push_back(factor * z);
  }
  return out;
}

GalileanTransform perturb(const GroupGaussian& g, const TangentVector& xi) {
  return g.side() == Side::Right ? compose(g.mean(), exp(xi)) : compose(exp(xi), g.mean());
}

std::vector<GalileanTransform> sample_perturbed(const GroupGaussian& g, std::size_t n,
                                                std::uint64_t seed) {
  std::vector<GalileanTransform> out;
  out.reserve(n);
  for (const auto& xi : sample_tangent(g.covariance(), n, seed)) out.push_back(perturb(g, xi));
  return out;
}

TangentVector tangent_offset(const GalileanTransform& f, const GalileanTransform& mean,
                             Side side) {
  return side == Side::Right ? log(compose(inverse(mean), f)) : log(compose(f, inverse(mean)));
}

Mat10 estimate_covariance(const std::vector<GalileanTransform>& samples,
                          const GalileanTransform& mean, Side side) {
  if (samples.size() < 2) {
    throw Error(ErrorKind::InsufficientSamples, "need at least two samples");
  }
  Mat10 sum = Mat10::Zero();
  for (const auto& f : samples) {
    const Vec10 xi = tangent_offset(f, mean, side);
    sum.noalias() += xi * xi.transpose();
  }
  return sum / static_cast<double>(samples.size());
}

GroupGaussian convert_side(const GroupGaussian& g) {
  const bool to_left = g.side() == Side::Right;
  const Mat10 a = to_left ? adjoint(g.mean()) : adjoint(inverse(g.mean()));
  Mat10 cov = a * g.covariance() * a.transpose();
  cov = 0.5 * (cov + cov.transpose());
  return {g.mean(), cov, to_left ? Side::Left : Side::Right};
}

SampleCloud transform_event_cloud(const GroupGaussian& g, const Event& p, std::size_t n,
                                  std::uint64_t seed) {
  SampleCloud cloud{{}, seed, n, p, g};
  cloud.records.reserve(n);
  for (const auto& xi : sample_tangent(g.covariance(), n, seed)) {
    cloud.records.push_back({act(perturb(g, xi), p), xi});
  }
  return cloud;
}

Eigen::Matrix<double, 2, 10> event_xy_jacobian(const GroupGaussian& g, const Event& p) {
  constexpr double kStep = 1e-6;
  Eigen::Matrix<double, 2, 10> h;
  for (int j = 0; j < tangent::kDim; ++j) {
    Vec10 d = Vec10::Zero();
    d(j) = kStep;
    const Vec3 plus = act(perturb(g, d), p).x;
    const Vec3 minus = act(perturb(g, -d), p).x;
    h.col(j) = (plus - minus).head<2>() / (2.0 * kStep);
  }
  return h;
}

EllipseProjection sigma_ellipse_xy(const GroupGaussian& g, const Event& p, double k,
                                   int segments) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidArgument, "sigma multiplier must be positive");
  if (segments < 63) throw Error(ErrorKind::InvalidArgument, "ellipse needs at least 64 points");

  const Eigen::Matrix<double, 2, 10> h = event_xy_jacobian(g, p);
  Eigen::Matrix2d projected = h * g.covariance() * h.transpose();
  projected = 0.5 * (projected + projected.transpose());

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(projected);
  if (eig.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorKind::DegenerateCovariance, "projected covariance is not PSD");
  }
  const Eigen::Matrix2d axes =
      k * eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

  EllipseProjection out;
  out.center = act(g.mean(), p).x.head<2>();
  out.polyline.reserve(segments + 1);
  for (int i = 0; i < segments; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / segments;
    out.polyline.push_back(out.center + axes * Eigen::Vector2d(std::cos(angle), std::sin(angle)));
  }
  out.polyline.push_back(out.polyline.front());
  return out;
}

}  // namespace sgal
