#pragma once

// Reference computations that share no code path with the closed forms:
// truncated power series, scaling and squaring, and plain 5x5 matrix algebra.
// Used by the self-check command and by the test suites.

#include <cmath>
#include <random>

#include <Eigen/Core>
#include <Eigen/LU>

#include "sgal/sgal3.hpp"

namespace sgal::oracle {

/// sum_{n < terms} a^n / (n + shift)!
template <int N>
Eigen::Matrix<double, N, N> shifted_series(const Eigen::Matrix<double, N, N>& a, int shift,
                                           int terms) {
  using M = Eigen::Matrix<double, N, N>;
  double factorial = 1.0;
  for (int k = 2; k <= shift; ++k) factorial *= k;
  M power = M::Identity();
  M sum = power / factorial;
  for (int n = 1; n < terms; ++n) {
    power = power * a;
    factorial *= (n + shift);
    sum += power / factorial;
  }
  return sum;
}

/// exp(a) by a `terms`-term Taylor series on a / 2^s followed by s squarings.
/// s is at least `min_squarings`, raised further if |a| / 2^s would exceed 0.5.
template <int N>
Eigen::Matrix<double, N, N> expm(const Eigen::Matrix<double, N, N>& a, int terms = 30,
                                 int min_squarings = 8) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = min_squarings;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  Eigen::Matrix<double, N, N> result =
      shifted_series<N>(Eigen::Matrix<double, N, N>(std::ldexp(1.0, -squarings) * a), 0, terms);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

inline Mat5 conjugate(const GalileanTransform& f, const TangentVector& xi) {
  const Mat5 m = f.matrix();
  return m * wedge(xi) * m.inverse();
}

inline Mat5 commutator(const TangentVector& xi, const TangentVector& eta) {
  const Mat5 a = wedge(xi);
  const Mat5 b = wedge(eta);
  return a * b - b * a;
}

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec3 u;
  do {
    u = Vec3(normal(rng), normal(rng), normal(rng));
  } while (u.norm() < 1e-8);
  return u.normalized();
}

/// Uniform direction, norm uniform in [0, max_norm].
template <int N>
Eigen::Matrix<double, N, 1> random_vector(std::mt19937_64& rng, double max_norm) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.0, max_norm);
  Eigen::Matrix<double, N, 1> v;
  do {
    for (int i = 0; i < N; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-8);
  return radius(rng) * v.normalized();
}

/// Rotation angle uniform in [0, max_angle), entries of v, r and tau uniform
/// in [-bound, bound].
inline GalileanTransform random_transform(std::mt19937_64& rng, double bound,
                                          double max_angle) {
  std::uniform_real_distribution<double> uniform(-bound, bound);
  std::uniform_real_distribution<double> angle(0.0, max_angle);
  const Vec3 phi = angle(rng) * random_unit(rng);
  const Vec3 v(uniform(rng), uniform(rng), uniform(rng));
  const Vec3 r(uniform(rng), uniform(rng), uniform(rng));
  return {exp_so3(phi), v, r, uniform(rng)};
}

inline double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const GalileanTransform& a, const GalileanTransform& b) {
  return max_abs(a.matrix() - b.matrix());
}

}  // namespace sgal::oracle
