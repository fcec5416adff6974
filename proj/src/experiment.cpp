#include "sgal/experiment.hpp"

#include <string>

#include "sgal/errors.hpp"

namespace sgal {

ExperimentConfig panel_config(Panel panel) {
  using namespace preset;
  ExperimentConfig config;
  config.mean = GalileanTransform(Mat3::Identity(), Vec3(kVelocityX, 0.0, 0.0), Vec3::Zero(), 0.0);
  config.event = {Vec3(kEventX, 0.0, 0.0), kEventT};
  config.covariance(tangent::kRho, tangent::kRho) = kSigmaRhoX * kSigmaRhoX;
  config.covariance(tangent::kPhi + 2, tangent::kPhi + 2) = kSigmaPhiZ * kSigmaPhiZ;
  switch (panel) {
    case Panel::Left:
      break;
    case Panel::Middle:
      config.covariance(tangent::kIota, tangent::kIota) = kSigmaIotaSmall * kSigmaIotaSmall;
      break;
    case Panel::Right:
      config.covariance(tangent::kIota, tangent::kIota) = kSigmaIotaLarge * kSigmaIotaLarge;
      break;
  }
  return config;
}

Panel parse_panel(std::string_view name) {
  if (name == "left") return Panel::Left;
  if (name == "middle") return Panel::Middle;
  if (name == "right") return Panel::Right;
  throw Error(ErrorKind::Parse, "panel: expected left, middle or right, got '" +
                                    std::string(name) + "'");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const GroupGaussian g(config.mean, config.covariance, config.side);
  return {transform_event_cloud(g, config.event, config.n, config.seed),
          sigma_ellipse_xy(g, config.event, config.k)};
}

}  // namespace sgal
