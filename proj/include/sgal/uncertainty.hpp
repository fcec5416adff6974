#pragma once

// Gaussian uncertainty on SGal(3), expressed as a zero-mean tangent-space
// perturbation xi ~ N(0, Sigma) applied on the right (F = Fbar exp(xi)) or on
// the left (F = exp(xi) Fbar) of the mean.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "sgal/sgal3.hpp"

namespace sgal {

enum class Side { Right, Left };

/// Mean, covariance and the side on which the perturbation acts.
/// The constructor validates Sigma: symmetric within 1e-10 and no eigenvalue
/// below -1e-10, otherwise Error{NotPositiveSemidefinite}.
class GroupGaussian {
 public:
  GroupGaussian(const GalileanTransform& mean, const Mat10& covariance, Side side);

  const GalileanTransform& mean() const { return mean_; }
  const Mat10& covariance() const { return covariance_; }
  Side side() const { return side_; }

 private:
  GalileanTransform mean_;
  Mat10 covariance_;
  Side side_;
};

namespace rng {

/// Counter-based generator: SplitMix64 finalizer applied to
/// seed ^ splitmix64(counter). Returns 64 random bits for (seed, counter).
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter);

/// Uniform on the open interval (0, 1) from the top 53 bits.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Standard normal by inverse CDF of counter_uniform.
double counter_normal(std::uint64_t seed, std::uint64_t counter);

}  // namespace rng

/// Symmetric square root L with L L^T = Sigma, via eigendecomposition so that
/// rank-deficient Sigma is accepted.
Mat10 covariance_factor(const Mat10& covariance);

/// n tangent draws; component j of sample i uses counter 10 i + j.
std::vector<TangentVector> sample_tangent(const Mat10& covariance, std::size_t n,
                                          std::uint64_t seed);

/// Applies xi on the side of g.
GalileanTransform perturb(const GroupGaussian& g, const TangentVector& xi);

std::vector<GalileanTransform> sample_perturbed(const GroupGaussian& g, std::size_t n,
                                                std::uint64_t seed);

/// Tangent offset of f from mean on the given side.
TangentVector tangent_offset(const GalileanTransform& f, const GalileanTransform& mean, Side side);

/// Empirical E[xi xi^T] with xi = tangent_offset(sample, mean, side).
Mat10 estimate_covariance(const std::vector<GalileanTransform>& samples,
                          const GalileanTransform& mean, Side side);

/// Same distribution described on the other side:
/// exp(xi) Fbar = Fbar exp(Ad_{Fbar^-1} xi).
GroupGaussian convert_side(const GroupGaussian& g);

struct CloudRecord {
  Event event_out;
  TangentVector xi;
};

struct SampleCloud {
  std::vector<CloudRecord> records;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  Event input;
  GroupGaussian gaussian;
};

SampleCloud transform_event_cloud(const GroupGaussian& g, const Event& p, std::size_t n,
                                  std::uint64_t seed);

struct EllipseProjection {
  Eigen::Vector2d center;
  std::vector<Eigen::Vector2d> polyline;  // closed: front() == back()
};

/// Linearized k-sigma contour of the x-y projection of act(F, p).
/// The polyline has `segments + 1` points.
EllipseProjection sigma_ellipse_xy(const GroupGaussian& g, const Event& p, double k,
                                   int segments = 128);

/// 2x10 central-difference Jacobian (step 1e-6) of xi -> xy(act(perturb(g, xi), p)).
Eigen::Matrix<double, 2, 10> event_xy_jacobian(const GroupGaussian& g, const Event& p);

}  // namespace sgal
