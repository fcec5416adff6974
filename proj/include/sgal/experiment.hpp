#pragma once

// Event-cloud experiment: an event in the local frame pushed through a
// right-perturbed transform that moves along +x.

#include <cstdint>
#include <string_view>

#include "sgal/uncertainty.hpp"

namespace sgal {

enum class Panel { Left, Middle, Right };

struct ExperimentConfig {
  GalileanTransform mean;
  Mat10 covariance = Mat10::Zero();
  Event event;
  std::size_t n = 1000;
  std::uint64_t seed = 42;
  Side side = Side::Right;
  double k = 3.0;
};

namespace preset {

inline constexpr double kVelocityX = 2.0;      // m/s, mean boost
inline constexpr double kEventX = 4.0;         // m, event position in the local frame
inline constexpr double kEventT = 1.0;         // s
inline constexpr double kSigmaRhoX = 0.4;      // m
inline constexpr double kSigmaPhiZ = 0.25;     // rad
inline constexpr double kSigmaIotaSmall = 0.15;  // s
inline constexpr double kSigmaIotaLarge = 0.5;   // s

}  // namespace preset

/// Left: x-translation and z-rotation noise only. Middle and Right add
/// small and large time noise respectively.
ExperimentConfig panel_config(Panel panel);

Panel parse_panel(std::string_view name);

struct ExperimentResult {
  SampleCloud cloud;
  EllipseProjection ellipse;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace sgal
