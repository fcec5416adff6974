#include "sgal/selfcheck.hpp"

#include <algorithm>
#include <numbers>

#include "sgal/oracle.hpp"

namespace sgal::selfcheck {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult make(std::string name, double max_error, double tolerance) {
  return {std::move(name), max_error <= tolerance, max_error, tolerance};
}

}  // namespace

CheckResult exp_series(const ExpFn& exp_fn, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    const Mat5 expected = oracle::expm<5>(wedge(xi));
    worst = std::max(worst, oracle::max_abs(exp_fn(xi).matrix() - expected));
  }
  return make("exp vs 5x5 series", worst, 1e-10);
}

CheckResult so3_series(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Vec3 phi = oracle::random_vector<3>(rng, 10.0);
    const Mat3 a = hat3(phi);
    worst = std::max(worst, oracle::max_abs(exp_so3(phi) - oracle::expm<3>(a)));
    worst = std::max(worst,
                     oracle::max_abs(left_jacobian_so3(phi) - oracle::shifted_series<3>(a, 1, 80)));
    worst = std::max(worst, oracle::max_abs(e_matrix(phi) - oracle::shifted_series<3>(a, 2, 80)));
  }
  return make("C, D, E vs series", worst, 1e-10);
}

CheckResult log_exp_round_trip(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kPi - 1e-3);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    xi.segment<3>(tangent::kPhi) = angle(rng) * oracle::random_unit(rng);
    worst = std::max(worst, oracle::max_abs(log(exp(xi)) - xi));
  }
  return make("log(exp(xi)) = xi", worst, 1e-9);
}

CheckResult exp_log_round_trip(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi - 1e-3);
    worst = std::max(worst, oracle::max_abs_diff(exp(log(f)), f));
  }
  return make("exp(log(F)) = F", worst, 1e-9);
}

CheckResult group_axioms(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  const auto id = GalileanTransform::identity();
  for (int i = 0; i < count; ++i) {
    const auto a = oracle::random_transform(rng, 10.0, kPi);
    const auto b = oracle::random_transform(rng, 10.0, kPi);
    const auto c = oracle::random_transform(rng, 10.0, kPi);
    worst = std::max(worst, oracle::max_abs_diff((a * b) * c, a * (b * c)));
    worst = std::max(worst, oracle::max_abs_diff(a * id, a));
    worst = std::max(worst, oracle::max_abs_diff(id * a, a));
    worst = std::max(worst, oracle::max_abs_diff(a * inverse(a), id));
    worst = std::max(worst, oracle::max_abs_diff(inverse(a) * a, id));
  }
  return make("group axioms", worst, 1e-12);
}

CheckResult adjoint_conjugation(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi);
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    worst = std::max(worst, oracle::max_abs(adjoint(f) * xi - vee(oracle::conjugate(f, xi))));
  }
  return make("Ad_F xi = vee(F xi^ F^-1)", worst, 1e-10);
}

CheckResult ad_commutator(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    const Vec10 eta = oracle::random_vector<10>(rng, 10.0);
    worst = std::max(worst, oracle::max_abs(ad_small(xi) * eta - vee(oracle::commutator(xi, eta))));
  }
  return make("ad_xi eta = vee([xi^, eta^])", worst, 1e-10);
}

CheckResult adjoint_exp(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Vec10 xi = oracle::random_vector<10>(rng, 10.0);
    worst = std::max(worst, oracle::max_abs(adjoint(exp(xi)) - oracle::expm<10>(ad_small(xi))));
  }
  return make("Ad_exp(xi) = expm(ad_xi)", worst, 1e-9);
}

CheckResult event_symmetry(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const auto f = oracle::random_transform(rng, 10.0, kPi);
    const double t = uniform(rng);
    const Event p1{Vec3(uniform(rng), uniform(rng), uniform(rng)), t};
    const Event p2{Vec3(uniform(rng), uniform(rng), uniform(rng)), t};
    const Event q1 = act(f, p1);
    const Event q2 = act(f, p2);
    worst = std::max(worst, std::abs((q1.x - q2.x).norm() - (p1.x - p2.x).norm()));
    worst = std::max(worst, std::abs(q1.t - q2.t));
  }
  return make("simultaneous distance and interval", worst, 1e-12);
}

std::vector<CheckResult> run_all() {
  return {
      so3_series(1000, 11),
      exp_series([](const TangentVector& xi) { return exp(xi); }, 1000, 12),
      log_exp_round_trip(1000, 13),
      exp_log_round_trip(1000, 14),
      group_axioms(1000, 15),
      adjoint_conjugation(1000, 16),
      ad_commutator(1000, 17),
      adjoint_exp(1000, 18),
      event_symmetry(1000, 19),
  };
}

}  // namespace sgal::selfcheck
