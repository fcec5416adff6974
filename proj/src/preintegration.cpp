#include "sgal/preintegration.hpp"

#include <cmath>

#include "sgal/errors.hpp"

namespace sgal {

TangentVector imu_tangent(const ImuSample& s) {
  if (!(s.dt > 0.0) || !std::isfinite(s.dt)) {
    throw Error(ErrorKind::NonPositiveDt, "IMU sample dt must be positive, got " +
                                              std::to_string(s.dt));
  }
  return tangent::make(Vec3::Zero(), s.accel * s.dt, s.omega * s.dt, s.dt);
}

PreintegratedDelta preintegrate_step(const ImuSample& s) {
  return {exp(imu_tangent(s)), s.dt, 1};
}

PreintegratedDelta preintegrate_sequence(std::span<const ImuSample> stream) {
  if (stream.empty()) throw Error(ErrorKind::EmptyStream, "no IMU samples to integrate");
  PreintegratedDelta acc = preintegrate_step(stream.front());
  for (const auto& s : stream.subspan(1)) acc = combine(acc, preintegrate_step(s));
  return acc;
}

PreintegratedDelta combine(const PreintegratedDelta& first, const PreintegratedDelta& second) {
  return {compose(first.delta, second.delta), first.total_time + second.total_time,
          first.sample_count + second.sample_count};
}

Vec3 se23_pattern_position(const ImuSample& s) {
  const TangentVector xi = imu_tangent(s);
  return left_jacobian_so3(tangent::phi(xi)) * tangent::rho(xi);
}

}  // namespace sgal
