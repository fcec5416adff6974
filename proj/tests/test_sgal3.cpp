#include "sgal/sgal3.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgal/errors.hpp"
#include "sgal/oracle.hpp"

using namespace sgal;
using oracle::max_abs;
using oracle::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
void expect_throws_kind(Fn&& fn, ErrorKind kind) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

GalileanTransform boost(const Vec3& v) { return {Mat3::Identity(), v, Vec3::Zero(), 0.0}; }
GalileanTransform time_shift(double tau) {
  return {Mat3::Identity(), Vec3::Zero(), Vec3::Zero(), tau};
}

}  // namespace

TEST(Wedge, Layout) {
  EXPECT_EQ(wedge(Vec10::Zero()), Mat5::Zero());

  Mat5 expected = Mat5::Zero();
  expected(0, 4) = 1.0;
  EXPECT_EQ(wedge(tangent::make(Vec3::UnitX(), Vec3::Zero(), Vec3::Zero(), 0.0)), expected);

  const Mat5 m = wedge(tangent::make(Vec3::Zero(), Vec3::Zero(), Vec3::UnitZ(), 2.0));
  EXPECT_EQ(Mat3(m.topLeftCorner<3, 3>()), hat3(Vec3::UnitZ()));
  EXPECT_EQ(m(3, 4), 2.0);
  EXPECT_EQ(m.rightCols<2>().topRows<3>(), (Eigen::Matrix<double, 3, 2>::Zero()));
}

TEST(Wedge, NuAndRhoColumns) {
  const Vec10 xi = tangent::make(Vec3(1, 2, 3), Vec3(4, 5, 6), Vec3::Zero(), 0.0);
  const Mat5 m = wedge(xi);
  EXPECT_EQ(Vec3(m.block<3, 1>(0, 3)), Vec3(4, 5, 6));
  EXPECT_EQ(Vec3(m.block<3, 1>(0, 4)), Vec3(1, 2, 3));
}

TEST(Vee, RoundTripAndRejection) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    EXPECT_EQ(vee(wedge(xi)), xi);
  }
  EXPECT_EQ(vee(Mat5::Zero()), Vec10::Zero());
  Mat5 bad = Mat5::Zero();
  bad(4, 0) = 1.0;
  expect_throws_kind([&] { vee(bad); }, ErrorKind::MalformedAlgebraElement);
  Mat5 not_skew = Mat5::Zero();
  not_skew(0, 0) = 1.0;
  expect_throws_kind([&] { vee(not_skew); }, ErrorKind::MalformedAlgebraElement);
}

TEST(Exp, Examples) {
  EXPECT_EQ(exp(Vec10::Zero()).matrix(), Mat5::Identity());

  // phi = 0: D = I, E = I/2, so the position follows a free-particle parabola.
  const Vec3 rho(0.3, -1.0, 2.0);
  const Vec3 nu(1.5, 0.5, -0.25);
  const double iota = 0.8;
  const auto f = exp(tangent::make(rho, nu, Vec3::Zero(), iota));
  EXPECT_EQ(f.rotation(), Mat3::Identity());
  EXPECT_EQ(f.velocity(), nu);
  EXPECT_LT((f.position() - (rho + 0.5 * nu * iota)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(f.time(), iota);

  std::mt19937_64 rng(2);
  Vec10 xi = oracle::random_vector<10>(rng, 1.0);
  xi *= 3.0 / xi.norm();
  EXPECT_LT(max_abs(exp(xi).matrix() - oracle::expm<5>(wedge(xi))), 1e-10);
}

TEST(Exp, MatchesSeriesOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    EXPECT_LT(max_abs(exp(xi).matrix() - oracle::expm<5>(wedge(xi))), 1e-10);
  }
}

TEST(Exp, SubgroupReductions) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Vec3 rho = oracle::random_vector<3>(rng, 5.0);
    const Vec3 nu = oracle::random_vector<3>(rng, 5.0);
    const Vec3 phi = oracle::random_vector<3>(rng, 3.0);

    // SE(3): no boost, no time.
    const auto se3 = exp(tangent::make(rho, Vec3::Zero(), phi, 0.0));
    EXPECT_EQ(se3.velocity(), Vec3::Zero());
    EXPECT_EQ(se3.time(), 0.0);
    EXPECT_LT((se3.position() - left_jacobian_so3(phi) * rho).cwiseAbs().maxCoeff(), 1e-14);
    Eigen::Matrix4d se3_algebra = Eigen::Matrix4d::Zero();
    se3_algebra.topLeftCorner<3, 3>() = hat3(phi);
    se3_algebra.block<3, 1>(0, 3) = rho;
    const Eigen::Matrix4d se3_oracle = oracle::expm<4>(se3_algebra);
    EXPECT_LT((se3.position() - se3_oracle.block<3, 1>(0, 3)).cwiseAbs().maxCoeff(), 1e-12);

    // SE_2(3): iota = 0 removes the E nu iota term.
    const auto se23 = exp(tangent::make(rho, nu, phi, 0.0));
    EXPECT_EQ(se23.position(), left_jacobian_so3(phi) * rho);
    EXPECT_EQ(se23.velocity(), left_jacobian_so3(phi) * nu);
  }
}

TEST(Log, Examples) {
  EXPECT_EQ(log(GalileanTransform::identity()), Vec10::Zero());

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, kPi - 0.01);
  for (int i = 0; i < 1000; ++i) {
    Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    xi.segment<3>(tangent::kPhi) = angle(rng) * oracle::random_unit(rng);
    EXPECT_LT(max_abs(log(exp(xi)) - xi), 1e-9);
  }

  Mat3 half_turn = Mat3::Identity();
  half_turn(0, 0) = half_turn(1, 1) = -1.0;
  expect_throws_kind(
      [&] { log(GalileanTransform(half_turn, Vec3::Zero(), Vec3::Zero(), 0.0)); },
      ErrorKind::AngleNearPi);
}

TEST(Log, ExpOfLogOnValidTransforms) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi - 1e-3);
    EXPECT_LT(max_abs_diff(exp(log(f)), f), 1e-9);
  }
}

TEST(Compose, Examples) {
  std::mt19937_64 rng(7);
  const auto f = oracle::random_transform(rng, 10.0, kPi);
  EXPECT_EQ((f * GalileanTransform::identity()).matrix(), f.matrix());

  EXPECT_EQ((time_shift(1.25) * time_shift(-3.5)).matrix(), time_shift(-2.25).matrix());

  const auto coupled = boost(Vec3::UnitX()) * time_shift(2.0);
  EXPECT_EQ(coupled.position(), Vec3(2, 0, 0));
  EXPECT_EQ(coupled.time(), 2.0);
  EXPECT_EQ(coupled.matrix(), boost(Vec3::UnitX()).matrix() * time_shift(2.0).matrix());
}

TEST(Compose, MatchesMatrixProduct) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_transform(rng, 10.0, kPi);
    const auto b = oracle::random_transform(rng, 10.0, kPi);
    EXPECT_LT(max_abs((a * b).matrix() - a.matrix() * b.matrix()), 1e-12);
  }
}

TEST(GroupAxioms, RandomTriples) {
  std::mt19937_64 rng(9);
  const auto id = GalileanTransform::identity();
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_transform(rng, 10.0, kPi);
    const auto b = oracle::random_transform(rng, 10.0, kPi);
    const auto c = oracle::random_transform(rng, 10.0, kPi);
    EXPECT_LT(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
    EXPECT_LT(max_abs_diff(a * id, a), 1e-12);
    EXPECT_LT(max_abs_diff(id * a, a), 1e-12);
    EXPECT_LT(max_abs_diff(a * inverse(a), id), 1e-12);
    EXPECT_LT(max_abs_diff(inverse(a) * a, id), 1e-12);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(GalileanTransform::identity()).matrix(), Mat5::Identity());
  EXPECT_EQ(inverse(boost(Vec3(1, -2, 3))).matrix(), boost(Vec3(-1, 2, -3)).matrix());

  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi);
    EXPECT_LT(max_abs(inverse(f).matrix() - f.matrix().inverse()), 1e-11);
    EXPECT_LT(max_abs_diff(inverse(f) * f, GalileanTransform::identity()), 1e-12);
  }
}

TEST(Act, Examples) {
  const Event p{Vec3(1, 2, 3), 4.0};
  const Event same = act(GalileanTransform::identity(), p);
  EXPECT_EQ(same.x, p.x);
  EXPECT_EQ(same.t, p.t);

  const Event moved = act(boost(Vec3::UnitX()), Event{Vec3::Zero(), 2.0});
  EXPECT_EQ(moved.x, Vec3(2, 0, 0));
  EXPECT_EQ(moved.t, 2.0);
}

TEST(Act, MatchesHomogeneousProduct) {
  std::mt19937_64 rng(11);
  const auto f = oracle::random_transform(rng, 10.0, kPi);
  const Event p{Vec3(1, -2, 0.5), 3.0};
  const Vec5 expected = f.matrix() * p.homogeneous();
  const Event q = act(f, p);
  EXPECT_LT((q.homogeneous() - expected).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Act, LeftActionAndGalileanInvariants) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_transform(rng, 10.0, kPi);
    const auto b = oracle::random_transform(rng, 10.0, kPi);
    const Event p1{Vec3(uniform(rng), uniform(rng), uniform(rng)), uniform(rng)};
    const Event p2{Vec3(uniform(rng), uniform(rng), uniform(rng)), p1.t};
    const Event p3{Vec3(uniform(rng), uniform(rng), uniform(rng)), uniform(rng)};

    const Event lhs = act(a * b, p1);
    const Event rhs = act(a, act(b, p1));
    EXPECT_LT((lhs.x - rhs.x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(std::abs(lhs.t - rhs.t), 1e-12);

    const Event q1 = act(a, p1);
    const Event q2 = act(a, p2);
    const Event q3 = act(a, p3);
    EXPECT_LT(std::abs((q1.x - q2.x).norm() - (p1.x - p2.x).norm()), 1e-12);
    EXPECT_EQ(q1.t - q2.t, 0.0);
    EXPECT_LT(std::abs((q1.t - q3.t) - (p1.t - p3.t)), 1e-14);
  }
}

TEST(Act, BoostChangesDistanceBetweenNonSimultaneousEvents) {
  // Same place, different times: a boost separates them by |v| dt.
  const Event p1{Vec3::Zero(), 0.0};
  const Event p2{Vec3::Zero(), 3.0};
  const auto f = boost(Vec3(2, 0, 0));
  const double before = (p1.x - p2.x).norm();
  const double after = (act(f, p1).x - act(f, p2).x).norm();
  EXPECT_EQ(before, 0.0);
  EXPECT_DOUBLE_EQ(after, 6.0);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(GalileanTransform::identity()), Mat10::Identity());

  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi);
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    const Vec10 ad_xi = adjoint(f) * xi;
    EXPECT_EQ(ad_xi(tangent::kIota), xi(tangent::kIota));
    EXPECT_LT(max_abs(ad_xi - vee(oracle::conjugate(f, xi))), 1e-10);
  }
}

TEST(Adjoint, Homomorphism) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const auto a = oracle::random_transform(rng, 10.0, kPi);
    const auto b = oracle::random_transform(rng, 10.0, kPi);
    EXPECT_LT(max_abs(adjoint(a * b) - adjoint(a) * adjoint(b)), 1e-10);
    EXPECT_LT(max_abs(adjoint(inverse(a)) - adjoint(a).inverse()), 1e-9);
  }
}

TEST(Adjoint, EqualsExponentialOfSmallAdjoint) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 3.0);
    EXPECT_LT(max_abs(adjoint(exp(xi)) - oracle::expm<10>(ad_small(xi))), 1e-9);
  }
}

TEST(AdSmall, Examples) {
  EXPECT_EQ(ad_small(Vec10::Zero()), Mat10::Zero());
  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    const Vec10 eta = oracle::random_vector<10>(rng, 10.0);
    EXPECT_LT(max_abs(ad_small(xi) * xi), 1e-12);
    EXPECT_LT(max_abs(ad_small(xi) * eta - vee(oracle::commutator(xi, eta))), 1e-12);
  }
}

TEST(LeftJacobianGroup, IdentityAtZero) {
  EXPECT_EQ(left_jacobian_group(Vec10::Zero()), Mat10::Identity());
}

TEST(LeftJacobianGroup, RotationBlockIsSO3Jacobian) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Vec10 xi = oracle::random_vector<10>(rng, 3.0);
    xi.segment<3>(tangent::kPhi) = oracle::random_vector<3>(rng, kPi - 0.1);
    const Mat10 j = left_jacobian_group(xi);
    const Mat3 block = j.block<3, 3>(tangent::kPhi, tangent::kPhi);
    EXPECT_LT((block - left_jacobian_so3(tangent::phi(xi))).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(LeftJacobianGroup, FiniteDifferenceSlopeIsQuadratic) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    Vec10 xi = oracle::random_vector<10>(rng, 1.0);
    xi *= 0.5 / xi.norm();
    const Vec10 dir = oracle::random_vector<10>(rng, 1.0).normalized();
    const Mat10 j = left_jacobian_group(xi);
    const auto base_inv = inverse(exp(xi));

    std::vector<double> errors;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const Vec10 d = h * dir;
      errors.push_back((log(exp(xi + d) * base_inv) - j * d).norm());
    }
    const double slope = std::log10(errors[0] / errors[2]) / 2.0;
    EXPECT_GE(slope, 1.8) << "errors " << errors[0] << " " << errors[1] << " " << errors[2];
  }
}

TEST(RightJacobianGroup, FirstOrderRelation) {
  std::mt19937_64 rng(19);
  const Vec10 xi = oracle::random_vector<10>(rng, 1.0);
  const Vec10 d = 1e-6 * oracle::random_vector<10>(rng, 1.0).normalized();
  const Vec10 lhs = log(inverse(exp(xi)) * exp(xi + d));
  EXPECT_LT((lhs - right_jacobian_group(xi) * d).norm(), 1e-11);
}

TEST(LeftJacobianGroup, DivergentSeriesIsReported) {
  const Vec10 huge = Vec10::Constant(50.0);
  expect_throws_kind([&] { left_jacobian_group(huge); }, ErrorKind::ConvergenceFailure);
}

TEST(Renormalize, RestoresRotation) {
  std::mt19937_64 rng(20);
  auto f = oracle::random_transform(rng, 1.0, kPi);
  const auto step = oracle::random_transform(rng, 1.0, 0.1);
  for (int i = 0; i < 100000; ++i) f = f * step;
  const auto fixed = f.renormalized();
  EXPECT_TRUE(fixed.is_valid(1e-14));
  EXPECT_EQ(fixed.velocity(), f.velocity());
  EXPECT_EQ(fixed.position(), f.position());
}
