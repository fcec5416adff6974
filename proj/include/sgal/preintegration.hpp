#pragma once

// IMU preintegration on SGal(3). Each sample with constant angular rate w and
// acceleration a over dt contributes
//
//   F_dt = exp( (0, a dt, w dt, dt) )
//
// and a stream is the left-to-right product F_1 F_2 ... F_N. Biases and
// gravity are not handled here; a is consumed as given.

#include <span>

#include "sgal/sgal3.hpp"

namespace sgal {

struct ImuSample {
  Vec3 omega = Vec3::Zero();  // rad/s
  Vec3 accel = Vec3::Zero();  // m/s^2
  double dt = 0.0;            // s
};

struct PreintegratedDelta {
  GalileanTransform delta;
  double total_time = 0.0;
  std::size_t sample_count = 0;
};

/// The tangent vector (0, a dt, w dt, dt). Throws Error{NonPositiveDt}.
TangentVector imu_tangent(const ImuSample& s);

PreintegratedDelta preintegrate_step(const ImuSample& s);

/// Throws Error{EmptyStream} or Error{NonPositiveDt}.
PreintegratedDelta preintegrate_sequence(std::span<const ImuSample> stream);

/// Joins two consecutive deltas.
PreintegratedDelta combine(const PreintegratedDelta& first, const PreintegratedDelta& second);

/// Single-step position computed with the SE_2(3) pattern r = D(w dt) rho,
/// i.e. without the E nu iota coupling. The SGal(3) position minus this is
/// exactly E(w dt) a dt^2.
Vec3 se23_pattern_position(const ImuSample& s);

}  // namespace sgal
