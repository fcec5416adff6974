#include "sgal/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sgal/errors.hpp"
#include "sgal/experiment.hpp"
#include "sgal/io.hpp"
#include "sgal/selfcheck.hpp"

namespace sgal::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AngleNearPi:
    case ErrorKind::JacobianSingular:
    case ErrorKind::DegenerateCovariance:
    case ErrorKind::ConvergenceFailure:
      return kDomainError;
    case ErrorKind::Io:
      return kIoError;
    case ErrorKind::NonMonotoneTime:
    case ErrorKind::NonPositiveDt:
      return kOrderingError;
    default:
      return kParseError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// Inline JSON argument, else --file, else stdin.
std::string read_input(const std::string& inline_json, const std::string& path, std::istream& in) {
  if (!inline_json.empty()) return inline_json;
  if (!path.empty()) return read_file(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  file << contents;
  if (!file) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

int cmd_exp(const std::string& inline_json, const std::string& path, std::istream& in,
            std::ostream& out) {
  const auto j = io::parse_json_text(read_input(inline_json, path, in));
  out << io::to_json(exp(io::parse_tangent(j))).dump() << '\n';
  return kOk;
}

int cmd_log(const std::string& inline_json, const std::string& path, std::istream& in,
            std::ostream& out) {
  const auto j = io::parse_json_text(read_input(inline_json, path, in));
  out << io::to_json(log(io::parse_transform(j))).dump() << '\n';
  return kOk;
}

int cmd_banana(const std::string& panel, const std::string& config_path,
               const std::string& out_dir, const std::size_t* n_override,
               const std::uint64_t* seed_override, std::ostream& out) {
  ExperimentConfig config = panel.empty()
                                ? io::parse_experiment_config(
                                      io::parse_json_text(read_file(config_path)))
                                : panel_config(parse_panel(panel));
  if (n_override) config.n = *n_override;
  if (seed_override) config.seed = *seed_override;

  const ExperimentResult result = run_experiment(config);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + out_dir + "': " + ec.message());

  std::ostringstream cloud;
  io::write_cloud_csv(cloud, result.cloud);
  std::ostringstream ellipse;
  io::write_ellipse_csv(ellipse, result.ellipse);
  const std::filesystem::path dir(out_dir);
  write_file(dir / "cloud.csv", cloud.str());
  write_file(dir / "ellipse3sigma.csv", ellipse.str());

  out << nlohmann::json{{"format_version", io::kFormatVersion},
                        {"cloud", (dir / "cloud.csv").string()},
                        {"ellipse", (dir / "ellipse3sigma.csv").string()},
                        {"n", config.n},
                        {"seed", config.seed}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_preintegrate(const std::string& path, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  const auto samples = io::parse_imu_csv(file);
  out << io::to_json(preintegrate_sequence(samples)).dump() << '\n';
  return kOk;
}

int cmd_selfcheck(std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = selfcheck::run_all();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  out << std::left << std::setw(40) << "check" << std::setw(8) << "result" << std::setw(14)
      << "max_error"
      << "tolerance\n";
  for (const auto& r : results) {
    all = all && r.passed;
    out << std::left << std::setw(40) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL")
        << std::setw(14) << std::setprecision(3) << std::scientific << r.max_error
        << r.tolerance << std::defaultfloat << '\n';
  }
  out << (all ? "all checks passed" : "SOME CHECKS FAILED") << " in " << std::fixed
      << std::setprecision(2) << seconds << " s" << std::defaultfloat << '\n';
  return all ? kOk : kSelfcheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Special Galilean group SGal(3) toolkit"};
  app.require_subcommand(1);

  std::string inline_json;
  std::string input_path;

  auto* exp_cmd = app.add_subcommand("exp", "Exponential map: {\"xi\": [10]} -> transform");
  exp_cmd->add_option("json", inline_json, "tangent record (default: stdin)");
  exp_cmd->add_option("--file", input_path, "read the record from a file");

  auto* log_cmd = app.add_subcommand("log", "Logarithm map: transform -> {\"xi\": [10]}");
  log_cmd->add_option("json", inline_json, "transform record (default: stdin)");
  log_cmd->add_option("--file", input_path, "read the record from a file");

  std::string panel;
  std::string config_path;
  std::string out_dir = ".";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  auto* banana = app.add_subcommand("banana", "Event-cloud experiment; writes cloud.csv and ellipse3sigma.csv");
  auto* panel_opt = banana->add_option("--panel", panel, "preset: left, middle or right")
                        ->check(CLI::IsMember({"left", "middle", "right"}));
  auto* config_opt = banana->add_option("--config", config_path, "experiment config JSON");
  panel_opt->excludes(config_opt);
  banana->add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* n_opt = banana->add_option("--n", n, "sample count override")->check(CLI::PositiveNumber);
  auto* seed_opt = banana->add_option("--seed", seed, "seed override");

  std::string imu_path;
  auto* pre = app.add_subcommand("preintegrate", "Preintegrate an IMU CSV log");
  pre->add_option("imu", imu_path, "CSV with header t,wx,wy,wz,ax,ay,az")->required();

  auto* check = app.add_subcommand("selfcheck", "Run the oracle checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*exp_cmd) return cmd_exp(inline_json, input_path, in, out);
    if (*log_cmd) return cmd_log(inline_json, input_path, in, out);
    if (*banana) {
      if (panel.empty() && config_path.empty()) {
        err << "error: banana needs --panel or --config\n";
        return kParseError;
      }
      const std::size_t n_value = n;
      const std::uint64_t seed_value = seed;
      return cmd_banana(panel, config_path, out_dir, *n_opt ? &n_value : nullptr,
                        *seed_opt ? &seed_value : nullptr, out);
    }
    if (*pre) return cmd_preintegrate(imu_path, out);
    if (*check) return cmd_selfcheck(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kParseError;
}

}  // namespace sgal::cli
