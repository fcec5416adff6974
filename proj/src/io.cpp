#include "sgal/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgal/errors.hpp"

namespace sgal::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::Parse, field + ": " + message);
}

double read_real(const json& j, const std::string& field) {
  if (!j.contains(field)) fail(field, "missing");
  const json& value = j.at(field);
  if (!value.is_number()) fail(field, "expected a number");
  return value.get<double>();
}

std::vector<double> read_reals(const json& j, const std::string& field, std::size_t count) {
  if (!j.contains(field)) fail(field, "missing");
  const json& value = j.at(field);
  if (!value.is_array()) fail(field, "expected an array of " + std::to_string(count) + " numbers");
  if (value.size() != count) {
    fail(field, "expected " + std::to_string(count) + " numbers, got " +
                    std::to_string(value.size()));
  }
  std::vector<double> out;
  out.reserve(count);
  for (const auto& item : value) {
    if (!item.is_number()) fail(field, "non-numeric entry");
    out.push_back(item.get<double>());
  }
  return out;
}

Vec3 read_vec3(const json& j, const std::string& field) {
  const auto values = read_reals(j, field, 3);
  return {values[0], values[1], values[2]};
}

json array_of(const double* data, std::size_t count) {
  json out = json::array();
  for (std::size_t i = 0; i < count; ++i) out.push_back(data[i]);
  return out;
}

json array_of(const Vec3& v) { return array_of(v.data(), 3); }

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

// Handles "# format_version: N"; other comment lines are ignored.
void check_csv_comment(const std::string& line) {
  const std::string body = trim(std::string_view(line).substr(1));
  constexpr std::string_view kKey = "format_version:";
  if (body.rfind(kKey, 0) != 0) return;
  const std::string value = trim(std::string_view(body).substr(kKey.size()));
  if (value != std::to_string(kFormatVersion)) {
    fail("format_version", "unsupported version '" + value + "'");
  }
}

}  // namespace

void check_format_version(const json& j) {
  if (!j.is_object()) fail("document", "expected a JSON object");
  if (!j.contains("format_version")) return;
  const json& v = j.at("format_version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    fail("format_version", "unsupported version " + v.dump());
  }
}

json to_json(const GalileanTransform& f) {
  const Eigen::Matrix<double, 3, 3, Eigen::RowMajor> c = f.rotation();
  return {{"format_version", kFormatVersion},
          {"C", array_of(c.data(), 9)},
          {"v", array_of(f.velocity())},
          {"r", array_of(f.position())},
          {"tau", f.time()}};
}

json to_json(const TangentVector& xi) {
  return {{"format_version", kFormatVersion}, {"xi", array_of(xi.data(), 10)}};
}

json to_json(const Event& p) { return {{"x", array_of(p.x)}, {"t", p.t}}; }

json to_json(const GroupGaussian& g) {
  const Eigen::Matrix<double, 10, 10, Eigen::RowMajor> cov = g.covariance();
  json mean = to_json(g.mean());
  mean.erase("format_version");
  return {{"mean", mean},
          {"covariance", array_of(cov.data(), 100)},
          {"side", g.side() == Side::Right ? "right" : "left"}};
}

json to_json(const PreintegratedDelta& d) {
  json out = to_json(d.delta);
  out["total_time"] = d.total_time;
  out["sample_count"] = d.sample_count;
  return out;
}

json to_json(const ExperimentConfig& config) {
  json out = to_json(GroupGaussian(config.mean, config.covariance, config.side));
  out["format_version"] = kFormatVersion;
  out["event"] = to_json(config.event);
  out["n"] = config.n;
  out["seed"] = config.seed;
  out["k"] = config.k;
  return out;
}

GalileanTransform parse_transform(const json& j, double rotation_tol) {
  check_format_version(j);
  const auto c = read_reals(j, "C", 9);
  const Mat3 rotation = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(c.data());
  if (!is_rotation(rotation, rotation_tol)) fail("C", "not a rotation matrix");
  return {rotation, read_vec3(j, "v"), read_vec3(j, "r"), read_real(j, "tau")};
}

TangentVector parse_tangent(const json& j) {
  check_format_version(j);
  const auto values = read_reals(j, "xi", 10);
  return Eigen::Map<const Vec10>(values.data());
}

TransformRecord parse_record(const json& j, double rotation_tol) {
  check_format_version(j);
  const bool has_xi = j.contains("xi");
  const bool has_group = j.contains("C") || j.contains("v") || j.contains("r") || j.contains("tau");
  if (has_xi == has_group) fail("record", "expected exactly one of {xi} or {C, v, r, tau}");
  if (has_xi) return parse_tangent(j);
  return parse_transform(j, rotation_tol);
}

Event parse_event(const json& j) {
  if (!j.is_object()) fail("event", "expected an object");
  return {read_vec3(j, "x"), read_real(j, "t")};
}

Mat10 parse_covariance(const json& j) {
  if (j.is_array()) {
    const auto values = read_reals(json{{"covariance", j}}, "covariance", 100);
    return Eigen::Map<const Eigen::Matrix<double, 10, 10, Eigen::RowMajor>>(values.data());
  }
  if (!j.is_object()) fail("covariance", "expected 100 numbers or an {index: sigma} object");
  Mat10 cov = Mat10::Zero();
  for (const auto& [key, value] : j.items()) {
    int index = -1;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc() || ptr != key.data() + key.size() || index < 0 || index > 9) {
      fail("covariance." + key, "index must be an integer in 0..9");
    }
    if (!value.is_number() || value.get<double>() < 0.0) {
      fail("covariance." + key, "sigma must be a non-negative number");
    }
    cov(index, index) = value.get<double>() * value.get<double>();
  }
  return cov;
}

ExperimentConfig parse_experiment_config(const json& j) {
  check_format_version(j);
  ExperimentConfig config = panel_config(Panel::Middle);
  if (!j.contains("covariance")) fail("covariance", "missing");
  config.covariance = parse_covariance(j.at("covariance"));
  if (j.contains("mean")) {
    const json& mean = j.at("mean");
    if (!mean.is_object()) fail("mean", "expected an object");
    const auto record = parse_record(mean);
    config.mean = std::holds_alternative<TangentVector>(record)
                      ? exp(std::get<TangentVector>(record))
                      : std::get<GalileanTransform>(record);
  }
  if (j.contains("event")) config.event = parse_event(j.at("event"));
  if (j.contains("n")) {
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() < 1) fail("n", "expected an integer >= 1");
    config.n = n.get<std::size_t>();
  }
  if (j.contains("seed")) {
    const json& seed = j.at("seed");
    if (!seed.is_number_integer() || seed.get<long long>() < 0) {
      fail("seed", "expected a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("side")) {
    const json& side = j.at("side");
    if (side == "right") {
      config.side = Side::Right;
    } else if (side == "left") {
      config.side = Side::Left;
    } else {
      fail("side", "expected \"right\" or \"left\"");
    }
  }
  if (j.contains("k")) {
    config.k = read_real(j, "k");
    if (!(config.k > 0.0)) fail("k", "must be positive");
  }
  try {
    GroupGaussian check(config.mean, config.covariance, config.side);
  } catch (const Error& e) {
    fail("covariance", e.what());
  }
  return config;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("document", e.what());
  }
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_cloud_csv(std::ostream& os, const SampleCloud& cloud) {
  os << "# format_version: " << kFormatVersion << '\n';
  os << "# seed: " << cloud.seed << '\n';
  os << "# n: " << cloud.count << '\n';
  os << "# event: " << to_json(cloud.input).dump() << '\n';
  os << "# gaussian: " << to_json(cloud.gaussian).dump() << '\n';
  os << "x,y,z,t_out";
  for (int i = 0; i < tangent::kDim; ++i) os << ",xi_" << i;
  os << '\n';
  for (const auto& rec : cloud.records) {
    const auto& e = rec.event_out;
    os << format_real(e.x.x()) << ',' << format_real(e.x.y()) << ',' << format_real(e.x.z())
       << ',' << format_real(e.t);
    for (int i = 0; i < tangent::kDim; ++i) os << ',' << format_real(rec.xi(i));
    os << '\n';
  }
}

void write_ellipse_csv(std::ostream& os, const EllipseProjection& ellipse) {
  os << "# format_version: " << kFormatVersion << '\n';
  os << "x,y\n";
  for (const auto& pt : ellipse.polyline) {
    os << format_real(pt.x()) << ',' << format_real(pt.y()) << '\n';
  }
}

std::vector<ImuSample> parse_imu_csv(std::istream& is) {
  constexpr std::string_view kHeader = "t,wx,wy,wz,ax,ay,az";

  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::vector<std::array<double, 7>> rows;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      check_csv_comment(text);
      continue;
    }
    if (!header_seen) {
      if (text != kHeader) fail("header", "expected '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    std::array<double, 7> row{};
    std::size_t col = 0;
    std::string_view rest = text;
    while (true) {
      const auto comma = rest.find(',');
      const std::string cell = trim(rest.substr(0, comma));
      if (col >= row.size()) fail("line " + std::to_string(line_no), "too many columns");
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), row[col]);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() ||
          !std::isfinite(row[col])) {
        fail("line " + std::to_string(line_no), "bad number '" + cell + "'");
      }
      ++col;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (col != row.size()) fail("line " + std::to_string(line_no), "expected 7 columns");
    rows.push_back(row);
  }
  if (!header_seen) fail("header", "missing");
  if (rows.size() < 2) fail("data", "need at least two timestamped rows");

  std::vector<ImuSample> samples;
  samples.reserve(rows.size() - 1);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double dt = rows[i + 1][0] - rows[i][0];
    if (!(dt > 0.0)) {
      throw Error(ErrorKind::NonMonotoneTime,
                  "timestamp " + format_real(rows[i + 1][0]) + " does not follow " +
                      format_real(rows[i][0]));
    }
    const auto& r = rows[i];
    samples.push_back({Vec3(r[1], r[2], r[3]), Vec3(r[4], r[5], r[6]), dt});
  }
  return samples;
}

}  // namespace sgal::io
