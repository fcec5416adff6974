#pragma once

// Wire formats shared by the CLI and its tests.
//
// JSON records carry "format_version": 1. A record without the field is read
// as version 1; any other value is rejected.
//
//   transform  {"C": [9, row-major], "v": [3], "r": [3], "tau": t}
//   tangent    {"xi": [10, (rho, nu, phi, iota)]}
//
// CSV files start with "# format_version: 1" and may carry further '#' lines.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "sgal/experiment.hpp"
#include "sgal/preintegration.hpp"
#include "sgal/uncertainty.hpp"

namespace sgal::io {

inline constexpr int kFormatVersion = 1;

using TransformRecord = std::variant<GalileanTransform, TangentVector>;

/// Throws Error{Parse} naming the offending field.
void check_format_version(const nlohmann::json& j);

nlohmann::json to_json(const GalileanTransform& f);
nlohmann::json to_json(const TangentVector& xi);
nlohmann::json to_json(const Event& p);
nlohmann::json to_json(const GroupGaussian& g);
nlohmann::json to_json(const PreintegratedDelta& d);
nlohmann::json to_json(const ExperimentConfig& config);

/// Exactly one of the two record shapes. `rotation_tol` bounds the
/// orthonormality error accepted for C.
TransformRecord parse_record(const nlohmann::json& j, double rotation_tol = 1e-9);
GalileanTransform parse_transform(const nlohmann::json& j, double rotation_tol = 1e-9);
TangentVector parse_tangent(const nlohmann::json& j);
Event parse_event(const nlohmann::json& j);

/// Either 100 row-major reals or a {"index": sigma} diagonal shorthand.
Mat10 parse_covariance(const nlohmann::json& j);

/// Missing fields other than "covariance" take the middle-panel defaults.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

/// Parses a whole JSON document; Error{Parse} on syntax errors.
nlohmann::json parse_json_text(const std::string& text);

/// 17 significant digits.
std::string format_real(double value);

void write_cloud_csv(std::ostream& os, const SampleCloud& cloud);
void write_ellipse_csv(std::ostream& os, const EllipseProjection& ellipse);

/// Header `t,wx,wy,wz,ax,ay,az`. Each interval [t_i, t_{i+1}] uses the
/// rates of row i. Error{Parse} on malformed input or fewer than two rows,
/// Error{NonMonotoneTime} unless timestamps strictly increase.
std::vector<ImuSample> parse_imu_csv(std::istream& is);

}  // namespace sgal::io
